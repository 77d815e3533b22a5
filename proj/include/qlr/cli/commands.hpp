#ifndef QLR_CLI_COMMANDS_HPP
#define QLR_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qlr/cli/input.hpp"
#include "qlr/cli/report.hpp"
#include "qlr/error.hpp"
#include "qlr/quantum.hpp"

namespace qlr::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitValidation = 2,
  kExitUnsupported = 3,
};

/// Unsupported requests and degenerate estimator inputs map to 3, every
/// other library error to 2.
int exit_code_for(ErrorKind kind);

struct AnalyzeOptions {
  /// Selectors: bayes:<feature>, naive, mean-freq, mean-range, quantum,
  /// wavefunction, all. Empty means all. <feature> is a label or a 1-based
  /// index.
  std::vector<std::string> methods;
  std::optional<double> hbar;
  std::optional<std::vector<double>> priors;
};

/// Runs the selected estimators. Explicitly requested methods that do not
/// apply to the input throw (Unsupported); under `all` they are skipped with
/// a warning. The wavefunction path is skipped with a warning whenever an
/// overlap block is not positive definite.
AnalysisReport analyze(const LoadedInput& input, const AnalyzeOptions& options);

/// Intersection ranges for every hypothesis and feature pair. NotCounts for
/// probability-only input.
std::vector<RangeEntry> all_ranges(const LoadedInput& input);

struct VerifyOutcome {
  ConstraintReport constraints;
  CrossPathReport cross_path;
  bool passed() const { return constraints.all_passed() && cross_path.ok(); }
};

VerifyOutcome verify(std::uint64_t samples, std::uint64_t seed,
                     const Posterior2x2Fn& posterior = {});

/// Parses "p1,p2,..." (ParseError on malformed numbers).
std::vector<double> parse_priors(const std::string& text);

/// Entry point of the `qlr` tool; `args` excludes the program name.
/// `verify_posterior` replaces the 2x2 posterior checked by `verify`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Posterior2x2Fn& verify_posterior = {});

}  // namespace qlr::cli

#endif  // QLR_CLI_COMMANDS_HPP
