#include "qlr/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace qlr::cli {

using nlohmann::json;

namespace {

constexpr const char* kTool = "qlr";

std::string fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, value);
  return buf;
}

json labels(const Labels& l) { return json(l); }

}  // namespace

json report_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::strtod(fixed(value).c_str(), nullptr);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json to_json(const AnalysisReport& report) {
  const auto& t = report.table;
  json input;
  input["source"] = report.source;
  input["kind"] = report.counts ? "counts" : "probabilities";
  input["features"] = labels(t.feature_labels());
  input["hypotheses"] = labels(t.hypothesis_labels());
  json x = json::array();
  for (std::size_t i = 0; i < t.features(); ++i) {
    json row = json::array();
    for (std::size_t a = 0; a < t.hypotheses(); ++a) row.push_back(report_number(t(i, a)));
    x.push_back(std::move(row));
  }
  input["x"] = std::move(x);
  json priors = json::array();
  for (Eigen::Index a = 0; a < t.priors().size(); ++a) priors.push_back(report_number(t.priors()(a)));
  input["priors"] = std::move(priors);
  if (report.counts) {
    json counts = json::array();
    for (std::size_t i = 0; i < report.counts->features(); ++i) {
      json row = json::array();
      for (std::size_t a = 0; a < report.counts->hypotheses(); ++a) {
        row.push_back(report.counts->count(i, a));
      }
      counts.push_back(std::move(row));
    }
    input["counts"] = std::move(counts);
    input["populations"] = report.counts->populations();
  }

  json results = json::object();
  for (const auto& r : report.results) {
    json entry;
    if (r.posterior) {
      entry["status"] = "ok";
      entry["method"] = std::string(to_string(r.posterior->method()));
      json p = json::array();
      for (std::size_t a = 0; a < r.posterior->size(); ++a) p.push_back(report_number((*r.posterior)[a]));
      entry["probabilities"] = std::move(p);
      entry["argmax"] = t.hypothesis_labels().at(r.posterior->argmax_index());
    } else {
      entry["status"] = "skipped";
      entry["reason"] = r.skipped_reason;
    }
    results[r.key] = std::move(entry);
  }

  json doc;
  doc["tool"] = kTool;
  doc["version"] = QLR_VERSION;
  doc["input"] = std::move(input);
  doc["results"] = std::move(results);
  doc["warnings"] = report.warnings;
  if (report.overlap) {
    const auto& d = report.overlap->diagnostics;
    json diag;
    diag["overlap_source"] = report.overlap->source;
    diag["hbar"] = report.overlap->hbar ? report_number(*report.overlap->hbar) : json(nullptr);
    json values = json::array();
    for (const auto& row : d.values) {
      json out = json::array();
      for (double v : row) out.push_back(report_number(v));
      values.push_back(std::move(out));
    }
    diag["coefficients"] = std::move(values);
    diag["within_unit_interval"] = d.within_unit_interval;
    diag["gram_positive_definite"] = d.gram_positive_definite;
    doc["diagnostics"] = std::move(diag);
  }
  if (!report.ranges.empty()) doc["ranges"] = ranges_to_json(report.source, report.ranges)["ranges"];
  return doc;
}

std::string to_text(const AnalysisReport& report) {
  const auto& t = report.table;
  std::ostringstream out;
  out << kTool << " " << QLR_VERSION << "\n";
  out << "source: " << report.source << " (" << (report.counts ? "counts" : "probabilities") << ")\n";
  out << "priors:";
  for (std::size_t a = 0; a < t.hypotheses(); ++a) {
    out << (a ? ", " : " ") << t.hypothesis_labels()[a] << "=" << fixed(t.priors()(static_cast<Eigen::Index>(a)));
  }
  out << "\n\n";

  std::size_t width = 6;
  for (const auto& r : report.results) width = std::max(width, r.key.size());
  out << std::left << std::setw(static_cast<int>(width + 2)) << "method";
  for (const auto& h : t.hypothesis_labels()) out << std::setw(16) << h;
  out << "argmax\n";
  for (const auto& r : report.results) {
    out << std::setw(static_cast<int>(width + 2)) << r.key;
    if (!r.posterior) {
      out << "skipped: " << r.skipped_reason << "\n";
      continue;
    }
    for (std::size_t a = 0; a < r.posterior->size(); ++a) out << std::setw(16) << fixed((*r.posterior)[a]);
    out << t.hypothesis_labels().at(r.posterior->argmax_index()) << "\n";
  }

  if (report.overlap) {
    out << "\noverlap (" << report.overlap->source;
    if (report.overlap->hbar) out << ", hbar=" << fixed(*report.overlap->hbar);
    out << "):\n";
    const auto& d = report.overlap->diagnostics;
    for (std::size_t a = 0; a < d.values.size(); ++a) {
      out << "  " << t.hypothesis_labels()[a] << ":";
      for (double v : d.values[a]) out << " " << fixed(v);
      out << (d.gram_positive_definite[a] ? "" : "  (not positive definite)") << "\n";
    }
  }
  if (!report.ranges.empty()) out << "\nranges:\n" << ranges_to_text(report.ranges);
  if (!report.warnings.empty()) {
    out << "\nwarnings:\n";
    for (const auto& w : report.warnings) out << "  - " << w << "\n";
  }
  return out.str();
}

json ranges_to_json(const std::string& source, const std::vector<RangeEntry>& ranges) {
  json list = json::array();
  for (const auto& r : ranges) {
    list.push_back({{"hypothesis", r.hypothesis},
                    {"features", {r.feature_i, r.feature_j}},
                    {"lo", r.range.lo},
                    {"hi", r.range.hi}});
  }
  return {{"tool", kTool}, {"version", QLR_VERSION}, {"source", source}, {"ranges", std::move(list)}};
}

std::string ranges_to_text(const std::vector<RangeEntry>& ranges) {
  std::ostringstream out;
  for (const auto& r : ranges) {
    out << "  " << r.hypothesis << ": " << r.feature_i << " & " << r.feature_j << " in [" << r.range.lo
        << ", " << r.range.hi << "]\n";
  }
  return out.str();
}

json verify_to_json(const ConstraintReport& constraints, const CrossPathReport& cross_path) {
  json checks = json::array();
  for (const auto& c : constraints.checks) {
    checks.push_back({{"name", c.name},
                      {"samples", c.samples},
                      {"passed", c.passed},
                      {"max_deviation", report_number(c.max_deviation)},
                      {"tolerance", report_number(c.tolerance)},
                      {"ok", c.ok()}});
  }
  json cross = {{"samples", cross_path.samples},
                {"max_posterior_deviation", report_number(cross_path.max_posterior_deviation)},
                {"max_basis_residual", report_number(cross_path.max_basis_residual)},
                {"max_backsubstitution_residual", report_number(cross_path.max_backsubstitution_residual)},
                {"max_normalization_deviation", report_number(cross_path.max_normalization_deviation)},
                {"tolerance", report_number(kResidualTolerance)},
                {"ok", cross_path.ok()}};
  return {{"tool", kTool},
          {"version", QLR_VERSION},
          {"samples", constraints.sample_count},
          {"seed", constraints.seed},
          {"checks", std::move(checks)},
          {"cross_path", std::move(cross)},
          {"all_passed", constraints.all_passed() && cross_path.ok()}};
}

std::string verify_to_text(const ConstraintReport& constraints, const CrossPathReport& cross_path) {
  std::ostringstream out;
  out << kTool << " " << QLR_VERSION << " verify: samples=" << constraints.sample_count
      << " seed=" << constraints.seed << "\n";
  for (const auto& c : constraints.checks) {
    out << (c.ok() ? "  pass " : "  FAIL ") << std::left << std::setw(30) << c.name << c.passed << "/"
        << c.samples << "  max deviation " << fixed(c.max_deviation) << "\n";
  }
  out << (cross_path.ok() ? "  pass " : "  FAIL ") << std::setw(30) << "cross_path" << cross_path.samples
      << " samples  max deviation " << fixed(cross_path.max_posterior_deviation) << "\n";
  return out.str();
}

}  // namespace qlr::cli
