#ifndef QLR_CLI_INPUT_HPP
#define QLR_CLI_INPUT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "qlr/quantum.hpp"
#include "qlr/tables.hpp"

namespace qlr::cli {

/// A table read from disk. Count input carries the CountTable it was built
/// from; JSON input may carry an explicit overlap matrix.
struct LoadedInput {
  std::string source;
  ContingencyTable table;
  std::optional<CountTable> counts;
  std::optional<OverlapMatrix> overlap;
};

/// CSV layout: header row of hypothesis labels (first cell is a corner
/// label), one row per feature with the label in the first column, and an
/// optional final `__population__` row. With the population row every value
/// is a nonnegative integer count; without it every value is a probability
/// in (0, 1]. Blank lines and lines starting with '#' are ignored.
LoadedInput parse_csv(std::string_view text, const std::string& source);

/// JSON layout:
///   {"kind": "probabilities", "x": [[...]], "priors": [...], "overlap": [[[...]]]}
///   {"kind": "counts", "counts": [[...]], "populations": [...]}
/// with optional "features" / "hypotheses" label arrays. "priors" and
/// "overlap" are optional and accepted for both kinds.
LoadedInput parse_json(std::string_view text, const std::string& source);

/// Reads `path` and dispatches on content: a leading '{' means JSON.
LoadedInput load_input(const std::string& path);

}  // namespace qlr::cli

#endif  // QLR_CLI_INPUT_HPP
