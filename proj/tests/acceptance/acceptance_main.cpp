// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qlr/classical.hpp"
#include "qlr/error.hpp"
#include "qlr/oracle.hpp"
#include "qlr/quantum.hpp"
#include "qlr/random.hpp"
#include "qlr/tables.hpp"
#include "qlr/wavefunction.hpp"

using namespace qlr;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

char buf[512];

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

ContingencyTable rows(double a, double b, double c, double d) {
  Matrix x(2, 2);
  x << a, b, c, d;
  return ContingencyTable::make(x);
}

CountTable counts(std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2, std::int64_t pa,
                  std::int64_t pb) {
  CountMatrix m(2, 2);
  m << a1, b1, a2, b2;
  return CountTable::make(m, {pa, pb});
}

CountTable street_counts() { return counts(8, 7, 6, 5, 10, 10); }

Outcome worked_values() {
  const auto c = street_counts();
  const auto t = from_counts(c);
  struct Row {
    const char* name;
    double got;
    double want;
  };
  const std::vector<Row> values{
      {"bayes[0]", bayes_posterior(t, 0)[0], 0.5333},
      {"bayes[1]", bayes_posterior(t, 0)[1], 0.4667},
      {"naive", naive_posterior(t)[0], 0.578},
      {"mean-freq", mean_frequency_posterior(c)[0], 0.588},
      {"mean-range", mean_range_posterior(c)[0], 0.597},
      {"quantum", posterior_2x2(t)[0], 0.5896},
  };
  Outcome o{true, ""};
  for (const auto& v : values) {
    const bool ok = std::abs(v.got - v.want) <= 5e-4;
    o.passed = o.passed && ok;
    o.detail += fmt("%s=%.6f%s ", v.name, v.got, ok ? "" : "(!)");
  }
  return o;
}

Outcome ranges() {
  const auto c = street_counts();
  const auto a = enumerate_joint_counts(c, 0, 0, 1);
  const auto b = enumerate_joint_counts(c, 1, 0, 1);
  const bool ok = a == std::vector<std::int64_t>{4, 5, 6} && b == std::vector<std::int64_t>{2, 3, 4, 5} &&
                  intersection_range(c, 0, 0, 1) == IntegerRange{4, 6} &&
                  intersection_range(c, 1, 0, 1) == IntegerRange{2, 5};
  return {ok, fmt("A=[%lld,%lld] B=[%lld,%lld]", static_cast<long long>(a.front()),
                  static_cast<long long>(a.back()), static_cast<long long>(b.front()),
                  static_cast<long long>(b.back()))};
}

Outcome known_values() {
  const auto start = std::chrono::steady_clock::now();
  const auto report = verify_constraint_suite(10000, 42);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o{true, ""};
  double worst = 0.0;
  for (const auto& check : report.checks) {
    if (check.name.rfind("known_value_", 0) != 0) continue;
    o.passed = o.passed && check.ok() && check.samples == 10000 && check.tolerance <= 1e-10;
    worst = std::max(worst, check.max_deviation);
  }
  o.passed = o.passed && seconds < 5.0;
  o.detail = fmt("samples=10000 max_dev=%.3g time=%.2fs", worst, seconds);
  return o;
}

Outcome symmetry() {
  const auto report = verify_constraint_suite(10000, 7);
  const auto* row = report.find("row_swap_invariance");
  const auto* col = report.find("column_swap_exchange");
  const auto* comp = report.find("complementarity");
  bool ok = row && col && comp && row->ok() && col->ok() && comp->ok() && col->max_deviation == 0.0;

  // Complementarity for the remaining methods on the same number of tables.
  SuiteRng rng(7);
  double worst = comp ? comp->max_deviation : 1.0;
  auto record = [&](const PosteriorDistribution& p) {
    worst = std::max(worst, std::abs(p.probabilities().sum() - 1.0));
  };
  for (int s = 0; s < 10000; ++s) {
    const auto t = random_table(rng, 2, 2);
    record(bayes_posterior(t, 0));
    record(bayes_posterior(t, 1));
    record(naive_posterior(t));
    record(posterior_independent(t, 0));
    record(posterior_2x2(t, rng.uniform(0.0, 5.0)));
    const auto overlap = OverlapMatrix({random_gram_matrix(rng, 2), random_gram_matrix(rng, 2)});
    record(posterior_general(t, overlap));
    record(posterior_via_wavefunction(t, overlap));

    const std::int64_t pa = rng.integer(1, 30), pb = rng.integer(1, 30);
    const auto c = counts(rng.integer(1, pa), rng.integer(1, pb), rng.integer(1, pa), rng.integer(1, pb), pa, pb);
    record(mean_frequency_posterior(c));
    try {
      record(mean_range_posterior(c));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateRange) throw;
    }
  }
  ok = ok && worst <= 1e-12;
  return {ok, fmt("row_swap=%.3g column_swap=%.3g complementarity=%.3g", row ? row->max_deviation : -1.0,
                  col ? col->max_deviation : -1.0, worst)};
}

Outcome cross_path() {
  const auto r = verify_cross_path(1000, 42);
  const bool ok = r.samples == 1000 && r.max_posterior_deviation < 1e-10 && r.max_basis_residual < 1e-10 &&
                  r.max_backsubstitution_residual < 1e-10;
  return {ok, fmt("posterior=%.3g basis=%.3g backsubstitution=%.3g", r.max_posterior_deviation,
                  r.max_basis_residual, r.max_backsubstitution_residual)};
}

struct SweepStats {
  std::uint64_t tables = 0;
  std::uint64_t degenerate = 0;
  double max_deviation = 0.0;
  bool ranges_exact = true;
  bool agree = true;
};

void check_table(const CountTable& c, SweepStats& st) {
  ++st.tables;
  for (std::size_t h = 0; h < 2; ++h) {
    const auto r = intersection_range(c, h, 0, 1);
    const auto ks = enumerate_joint_counts(c, h, 0, 1);
    if (ks.empty() || ks.front() != r.lo || ks.back() != r.hi ||
        static_cast<std::int64_t>(ks.size()) != r.size()) {
      st.ranges_exact = false;
    }
  }
  std::optional<OracleEstimates> oracle;
  std::optional<PosteriorDistribution> freq;
  try {
    oracle = oracle_mean_estimators(c);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateRange) throw;
  }
  try {
    freq = mean_frequency_posterior(c);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateRange) throw;
  }
  if (oracle.has_value() != freq.has_value()) {
    st.agree = false;
    return;
  }
  if (!oracle) {
    ++st.degenerate;
    return;
  }
  st.max_deviation = std::max(st.max_deviation, std::abs(oracle->mean_frequency[0] - (*freq)[0]));
  try {
    const auto range = mean_range_posterior(c);
    if (!oracle->mean_range) {
      st.agree = false;
    } else {
      st.max_deviation = std::max(st.max_deviation, std::abs((*oracle->mean_range)[0] - range[0]));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateRange) throw;
    if (oracle->degenerate_pairs == 0) st.agree = false;
  }
}

Outcome oracle_sweep() {
  const auto start = std::chrono::steady_clock::now();
  SweepStats st;
  for (std::int64_t pa = 1; pa <= 12; ++pa) {
    for (std::int64_t pb = 1; pb <= 12; ++pb) {
      for (std::int64_t a1 = 0; a1 <= pa; ++a1) {
        for (std::int64_t a2 = 0; a2 <= pa; ++a2) {
          for (std::int64_t b1 = 0; b1 <= pb; ++b1) {
            for (std::int64_t b2 = 0; b2 <= pb; ++b2) check_table(counts(a1, b1, a2, b2, pa, pb), st);
          }
        }
      }
    }
  }
  const std::uint64_t exhaustive = st.tables;
  SuiteRng rng(42);
  for (int s = 0; s < 200000; ++s) {
    std::int64_t pa = rng.integer(1, 30), pb = rng.integer(13, 30);
    if (rng.integer(0, 1) == 1) std::swap(pa, pb);
    check_table(counts(rng.integer(0, pa), rng.integer(0, pb), rng.integer(0, pa), rng.integer(0, pb), pa, pb),
                st);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = st.ranges_exact && st.agree && st.max_deviation <= 1e-14 && seconds < 60.0;
  return {ok, fmt("exhaustive=%llu random=%llu degenerate=%llu max_dev=%.3g ranges_exact=%s time=%.2fs",
                  static_cast<unsigned long long>(exhaustive),
                  static_cast<unsigned long long>(st.tables - exhaustive),
                  static_cast<unsigned long long>(st.degenerate), st.max_deviation,
                  st.ranges_exact ? "yes" : "no", seconds)};
}

Outcome non_homogeneity() {
  const double q1 = posterior_2x2(rows(1.0, 1.0, 1.0, 0.5))[0];
  const double q2 = posterior_2x2(rows(0.5, 0.5, 0.5, 0.25))[0];
  const double n1 = naive_posterior(rows(1.0, 1.0, 1.0, 0.5))[0];
  const double n2 = naive_posterior(rows(0.5, 0.5, 0.5, 0.25))[0];
  const bool ok = std::abs(q1 - 0.6667) <= 1e-4 && std::abs(q2 - 0.7059) <= 1e-4 &&
                  std::abs(n1 - 0.6667) <= 1e-4 && std::abs(n2 - 0.6667) <= 1e-4;
  return {ok, fmt("quantum=%.6f,%.6f naive=%.6f,%.6f", q1, q2, n1, n2)};
}

Outcome hbar_limits() {
  SuiteRng rng(42);
  double zero_dev = 0.0, large_dev = 0.0;
  for (int s = 0; s < 10000; ++s) {
    const auto t = random_table(rng, 2, 2);
    const Vector w = t.block_weights();
    Vector reduced(2);
    for (Eigen::Index a = 0; a < 2; ++a) reduced(a) = w(a) * t.x().col(a).sum();
    reduced /= reduced.sum();
    zero_dev = std::max(zero_dev, (posterior_2x2(t, 0.0).probabilities() - reduced).cwiseAbs().maxCoeff());
    const Vector plain = posterior_2x2(t).probabilities();
    for (double hbar : {40.0, 50.0, 100.0}) {
      large_dev = std::max(large_dev, (posterior_2x2(t, hbar).probabilities() - plain).cwiseAbs().maxCoeff());
    }
  }
  const bool ok = zero_dev <= 1e-12 && large_dev <= 1e-10;
  return {ok, fmt("hbar=0 dev=%.3g hbar>=40 dev=%.3g", zero_dev, large_dev)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"worked-values", worked_values},   {"intersection-ranges", ranges},
      {"known-values", known_values},   {"symmetry", symmetry},
      {"cross-path", cross_path},       {"oracle-equivalence", oracle_sweep},
      {"non-homogeneity", non_homogeneity}, {"hbar-limits", hbar_limits},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) ++failures;
    std::printf("[%s] %d %s: %s (%.1f ms)\n", o.passed ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), ms);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
