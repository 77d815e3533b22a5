#include "qlr/cli/commands.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qlr/classical.hpp"
#include "qlr/wavefunction.hpp"

namespace qlr::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Unsupported:
    case ErrorKind::DegenerateRange:
      return kExitUnsupported;
    default:
      return kExitValidation;
  }
}

std::vector<double> parse_priors(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || errno == ERANGE) {
      throw Error(ErrorKind::ParseError, "--priors: cannot parse '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw Error(ErrorKind::ParseError, "--priors: no values");
  return values;
}

namespace {

constexpr const char* kAllMethods[] = {"naive", "mean-freq", "mean-range", "quantum",
                                       "wavefunction"};

std::size_t resolve_feature(const ContingencyTable& table, const std::string& name) {
  const auto& labels = table.feature_labels();
  const auto it = std::find(labels.begin(), labels.end(), name);
  if (it != labels.end()) return static_cast<std::size_t>(it - labels.begin());
  char* end = nullptr;
  const long index = std::strtol(name.c_str(), &end, 10);
  if (!name.empty() && end == name.c_str() + name.size() && index >= 1 &&
      static_cast<std::size_t>(index) <= table.features()) {
    return static_cast<std::size_t>(index - 1);
  }
  throw Error(ErrorKind::BadIndex, "bayes: no feature named '" + name + "'");
}

struct Selection {
  std::string key;
  bool explicit_request = true;
};

std::vector<Selection> expand_methods(const ContingencyTable& table,
                                      const std::vector<std::string>& requested) {
  std::vector<Selection> out;
  auto add = [&](std::string key, bool explicit_request) {
    for (auto& s : out) {
      if (s.key == key) {
        s.explicit_request = s.explicit_request || explicit_request;
        return;
      }
    }
    out.push_back(Selection{std::move(key), explicit_request});
  };
  const std::vector<std::string> methods = requested.empty() ? std::vector<std::string>{"all"} : requested;
  for (const auto& m : methods) {
    if (m == "all") {
      for (const auto& label : table.feature_labels()) add("bayes:" + label, false);
      for (const char* name : kAllMethods) add(name, false);
    } else if (m.rfind("bayes:", 0) == 0) {
      const auto feature = resolve_feature(table, m.substr(6));
      add("bayes:" + table.feature_labels()[feature], true);
    } else if (std::find(std::begin(kAllMethods), std::end(kAllMethods), m) != std::end(kAllMethods)) {
      add(m, true);
    } else {
      throw Error(ErrorKind::ParseError, "unknown method '" + m + "'");
    }
  }
  return out;
}

// The overlap used by the quantum and wavefunction methods: the input's own
// matrix when given, else the closed form for 2x2 tables. Moderated by hbar.
std::optional<OverlapMatrix> effective_overlap(const LoadedInput& input, const ContingencyTable& table,
                                               std::optional<double> hbar, std::string& source) {
  std::optional<OverlapMatrix> overlap;
  if (input.overlap) {
    overlap = *input.overlap;
    source = "input";
  } else if (table.features() == 2 && table.hypotheses() == 2) {
    const auto pair = overlap_coefficients(table);
    overlap = OverlapMatrix::from_pairs({pair.c1, pair.c2});
    source = "closed_form";
  } else {
    return std::nullopt;
  }
  if (hbar) overlap = overlap->scaled(hbar_factor(*hbar));
  return overlap;
}

}  // namespace

std::vector<RangeEntry> all_ranges(const LoadedInput& input) {
  if (!input.counts) {
    throw Error(ErrorKind::NotCounts, input.source + ": ranges need integer counts with a population row");
  }
  const auto& c = *input.counts;
  std::vector<RangeEntry> out;
  for (std::size_t a = 0; a < c.hypotheses(); ++a) {
    for (std::size_t i = 0; i < c.features(); ++i) {
      for (std::size_t j = i + 1; j < c.features(); ++j) {
        out.push_back(RangeEntry{c.hypothesis_labels()[a], c.feature_labels()[i], c.feature_labels()[j],
                                 intersection_range(c, a, i, j)});
      }
    }
  }
  return out;
}

AnalysisReport analyze(const LoadedInput& input, const AnalyzeOptions& options) {
  ContingencyTable table = input.table;
  if (options.priors) {
    Vector p(static_cast<Eigen::Index>(options.priors->size()));
    for (std::size_t a = 0; a < options.priors->size(); ++a) p(static_cast<Eigen::Index>(a)) = (*options.priors)[a];
    table = table.with_priors(std::move(p));
  }
  if (options.hbar) hbar_factor(*options.hbar);  // rejects negative values up front

  AnalysisReport report{input.source, table, input.counts, {}, std::nullopt, {}, {}};
  const auto selections = expand_methods(table, options.methods);

  std::string overlap_source;
  std::optional<OverlapMatrix> overlap;
  const bool wants_overlap = std::any_of(selections.begin(), selections.end(), [](const Selection& s) {
    return s.key == "quantum" || s.key == "wavefunction";
  });
  if (wants_overlap) {
    if (input.overlap && (input.overlap->features() != table.features() ||
                          input.overlap->hypotheses() != table.hypotheses())) {
      throw Error(ErrorKind::ShapeMismatch, "overlap does not match the table shape");
    }
    overlap = effective_overlap(input, table, options.hbar, overlap_source);
    if (overlap) {
      const auto diagnostics = diagnose(*overlap);
      report.overlap = OverlapReport{overlap_source, options.hbar, diagnostics};
      const auto& labels = table.hypothesis_labels();
      const auto& features = table.feature_labels();
      for (std::size_t a = 0; a < diagnostics.values.size(); ++a) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < table.features(); ++i) {
          for (std::size_t j = i + 1; j < table.features(); ++j, ++k) {
            if (!diagnostics.within_unit_interval[a][k]) {
              std::ostringstream w;
              w << "overlap c[" << labels[a] << "](" << features[i] << ", " << features[j]
                << ") = " << report_number(diagnostics.values[a][k]).dump() << " is outside (-1, 1)";
              report.warnings.push_back(w.str());
            }
          }
        }
      }
    }
    if (options.hbar && *options.hbar == 0.0) report.warnings.push_back("overlap disabled at hbar=0");
  }

  const Vector priors = table.priors();
  auto skip = [&](const Selection& s, const Error& e) {
    if (s.explicit_request && e.kind() != ErrorKind::NotPositiveDefinite) throw e;
    report.results.push_back(MethodResult{s.key, std::nullopt, e.what()});
    report.warnings.push_back(s.key + " skipped: " + e.what());
  };

  for (const auto& s : selections) {
    try {
      if (s.key.rfind("bayes:", 0) == 0) {
        const auto feature = resolve_feature(table, s.key.substr(6));
        report.results.push_back(MethodResult{s.key, bayes_posterior(table, feature), {}});
      } else if (s.key == "naive") {
        report.results.push_back(MethodResult{s.key, naive_posterior(table), {}});
      } else if (s.key == "mean-freq" || s.key == "mean-range") {
        if (!input.counts) throw Error(ErrorKind::Unsupported, "needs integer counts with a population row");
        report.results.push_back(MethodResult{
            s.key, s.key == "mean-freq" ? mean_frequency_posterior(*input.counts, priors)
                                        : mean_range_posterior(*input.counts, priors),
            {}});
      } else if (s.key == "quantum") {
        if (!overlap) {
          throw Error(ErrorKind::Unsupported,
                      "overlap coefficients are only derived for 2x2 tables; supply \"overlap\" in JSON input");
        }
        report.results.push_back(MethodResult{
            s.key,
            (!input.overlap && !options.hbar) ? posterior_2x2(table) : posterior_general(table, *overlap),
            {}});
      } else if (s.key == "wavefunction") {
        if (!overlap) {
          throw Error(ErrorKind::Unsupported,
                      "overlap coefficients are only derived for 2x2 tables; supply \"overlap\" in JSON input");
        }
        report.results.push_back(MethodResult{s.key, posterior_via_wavefunction(table, *overlap), {}});
      }
    } catch (const NotPositiveDefiniteError& e) {
      skip(s, e);
      report.warnings.back() += "; wavefunction cross-check unavailable for " +
                                table.hypothesis_labels().at(e.hypothesis());
    } catch (const Error& e) {
      skip(s, e);
    }
  }
  if (input.counts && input.counts->features() >= 2) report.ranges = all_ranges(input);
  return report;
}

VerifyOutcome verify(std::uint64_t samples, std::uint64_t seed, const Posterior2x2Fn& posterior) {
  return VerifyOutcome{verify_constraint_suite(samples, seed, posterior), verify_cross_path(samples, seed)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Posterior2x2Fn& verify_posterior) {
  CLI::App app{"Likelihood ratios over contingency tables with intersecting features", "qlr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("qlr ") + QLR_VERSION);

  std::string format = "json";
  const auto formats = CLI::IsMember({"json", "text"});

  auto* analyze_cmd = app.add_subcommand("analyze", "Run estimators on a contingency table");
  std::string analyze_path;
  AnalyzeOptions options;
  double hbar = 0.0;
  std::string priors_text;
  analyze_cmd->add_option("file", analyze_path, "CSV or JSON table")->required();
  analyze_cmd->add_option("--method", options.methods,
                          "bayes:<feature>, naive, mean-freq, mean-range, quantum, wavefunction, all")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* hbar_opt = analyze_cmd->add_option("--hbar", hbar, "Moderate overlaps by 1 - exp(-hbar)");
  auto* priors_opt = analyze_cmd->add_option("--priors", priors_text, "Comma-separated prior weights");
  analyze_cmd->add_option("--format", format)->check(formats);

  auto* ranges_cmd = app.add_subcommand("ranges", "Feasible intersection counts per feature pair");
  std::string ranges_path;
  ranges_cmd->add_option("file", ranges_path, "CSV or JSON count table")->required();
  ranges_cmd->add_option("--format", format)->check(formats);

  auto* verify_cmd = app.add_subcommand("verify", "Randomized constraint and cross-path checks");
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 42;
  verify_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--format", format)->check(formats);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink_out, sink_err;
    const int code = app.exit(e, sink_out, sink_err);
    out << sink_out.str();
    err << sink_err.str();
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (*hbar_opt) options.hbar = hbar;
      if (*priors_opt) options.priors = parse_priors(priors_text);
      const auto report = analyze(load_input(analyze_path), options);
      out << (format == "json" ? dump(to_json(report)) : to_text(report));
      return kExitOk;
    }
    if (ranges_cmd->parsed()) {
      const auto input = load_input(ranges_path);
      const auto ranges = all_ranges(input);
      out << (format == "json" ? dump(ranges_to_json(input.source, ranges)) : ranges_to_text(ranges));
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto outcome = verify(samples, seed, verify_posterior);
      out << (format == "json" ? dump(verify_to_json(outcome.constraints, outcome.cross_path))
                               : verify_to_text(outcome.constraints, outcome.cross_path));
      return outcome.passed() ? kExitOk : kExitCheckFailed;
    }
  } catch (const Error& e) {
    err << "qlr: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitValidation;
}

}  // namespace qlr::cli
