#ifndef QLR_CLI_REPORT_HPP
#define QLR_CLI_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlr/posterior.hpp"
#include "qlr/quantum.hpp"
#include "qlr/tables.hpp"
#include "qlr/wavefunction.hpp"

namespace qlr::cli {

/// Significant digits of every floating-point value in a report.
inline constexpr int kReportDigits = 10;

/// Rounds to kReportDigits significant digits so the serialized value is
/// stable and re-parses to the same double.
nlohmann::json report_number(double value);

struct MethodResult {
  /// Selector as requested, e.g. "naive" or "bayes:garage".
  std::string key;
  std::optional<PosteriorDistribution> posterior;
  /// Set when the method was skipped.
  std::string skipped_reason;
};

struct RangeEntry {
  std::string hypothesis;
  std::string feature_i;
  std::string feature_j;
  IntegerRange range;
};

struct OverlapReport {
  std::string source;  // "closed_form" or "input"
  std::optional<double> hbar;
  CoefficientDiagnostics diagnostics;
};

struct AnalysisReport {
  std::string source;
  ContingencyTable table;
  std::optional<CountTable> counts;
  std::vector<MethodResult> results;
  std::optional<OverlapReport> overlap;
  std::vector<RangeEntry> ranges;
  std::vector<std::string> warnings;
};

nlohmann::json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

nlohmann::json ranges_to_json(const std::string& source, const std::vector<RangeEntry>& ranges);
std::string ranges_to_text(const std::vector<RangeEntry>& ranges);

nlohmann::json verify_to_json(const ConstraintReport& constraints, const CrossPathReport& cross_path);
std::string verify_to_text(const ConstraintReport& constraints, const CrossPathReport& cross_path);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace qlr::cli

#endif  // QLR_CLI_REPORT_HPP
