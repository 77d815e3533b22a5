#include "qlr/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "qlr/error.hpp"

namespace qlr {

std::vector<std::int64_t> enumerate_joint_counts(const CountTable& counts, std::size_t hypothesis,
                                                 std::size_t feature_i, std::size_t feature_j) {
  if (hypothesis >= counts.hypotheses() || feature_i >= counts.features() ||
      feature_j >= counts.features() || feature_i == feature_j) {
    std::ostringstream out;
    out << "invalid index (hypothesis " << hypothesis << ", features " << feature_i << ", "
        << feature_j << ")";
    throw Error(ErrorKind::BadIndex, out.str());
  }
  const auto ni = counts.count(feature_i, hypothesis);
  const auto nj = counts.count(feature_j, hypothesis);
  const auto n = counts.population(hypothesis);
  std::vector<std::int64_t> feasible;
  for (std::int64_t k = 0; k <= n; ++k) {
    const bool both = k >= 0;
    const bool only_i = ni - k >= 0;
    const bool only_j = nj - k >= 0;
    const bool neither = n - ni - nj + k >= 0;
    if (both && only_i && only_j && neither) feasible.push_back(k);
  }
  return feasible;
}

EnumerationResult enumerate(const CountTable& counts) {
  EnumerationResult result;
  for (std::size_t a = 0; a < counts.hypotheses(); ++a) {
    HypothesisEnumeration h;
    h.feasible = enumerate_joint_counts(counts, a, 0, 1);
    const auto n = static_cast<double>(counts.population(a));
    const auto [lo, hi] = std::minmax_element(h.feasible.begin(), h.feasible.end());
    h.endpoint_probabilities = {static_cast<double>(*lo) / n, static_cast<double>(*hi) / n};
    std::int64_t sum = 0;
    for (auto k : h.feasible) sum += k;
    h.enumeration_mean = static_cast<double>(sum) / static_cast<double>(h.feasible.size()) / n;
    result.per_hypothesis.push_back(std::move(h));
  }
  return result;
}

OracleEstimates oracle_mean_estimators(const CountTable& counts, std::optional<Vector> priors) {
  if (counts.features() != 2) {
    std::ostringstream out;
    out << "enumeration needs exactly 2 features, table has " << counts.features();
    throw Error(ErrorKind::Unsupported, out.str());
  }
  Vector p;
  if (priors) {
    Matrix ones = Matrix::Ones(1, static_cast<Eigen::Index>(counts.hypotheses()));
    p = ContingencyTable::make(std::move(ones), std::move(priors)).priors();
  } else {
    p = counts.population_priors();
  }

  std::vector<std::vector<std::int64_t>> feasible;
  for (std::size_t a = 0; a < counts.hypotheses(); ++a) {
    feasible.push_back(enumerate_joint_counts(counts, a, 0, 1));
  }

  Vector w(static_cast<Eigen::Index>(counts.hypotheses()));
  for (std::size_t a = 0; a < counts.hypotheses(); ++a) {
    std::int64_t sum = 0;
    for (auto k : feasible[a]) sum += k;
    const double mean = static_cast<double>(sum) / static_cast<double>(feasible[a].size());
    w(static_cast<Eigen::Index>(a)) =
        p(static_cast<Eigen::Index>(a)) * (mean / static_cast<double>(counts.population(a)));
  }
  if (!(w.sum() > 0.0)) {
    throw Error(ErrorKind::DegenerateRange, "every hypothesis has an empty mean intersection");
  }
  OracleEstimates out{PosteriorDistribution::from_weights(w, Method::MeanFrequency), std::nullopt,
                      std::nullopt, 0};
  if (counts.hypotheses() != 2) return out;

  auto weighted = [&](std::size_t a, std::int64_t k) {
    return p(static_cast<Eigen::Index>(a)) * static_cast<double>(k) /
           static_cast<double>(counts.population(a));
  };
  double lowest = std::numeric_limits<double>::infinity();
  double highest = -std::numeric_limits<double>::infinity();
  double total = 0.0;
  std::uint64_t used = 0;
  for (auto k1 : feasible[0]) {
    for (auto k2 : feasible[1]) {
      const double v1 = weighted(0, k1);
      const double v2 = weighted(1, k2);
      if (!(v1 + v2 > 0.0)) {
        ++out.degenerate_pairs;
        continue;
      }
      const double ratio = v1 / (v1 + v2);
      lowest = std::min(lowest, ratio);
      highest = std::max(highest, ratio);
      total += ratio;
      ++used;
    }
  }
  if (used > 0) {
    out.mean_range = PosteriorDistribution::binary((lowest + highest) / 2.0, Method::MeanRange);
    out.enumeration_mean =
        PosteriorDistribution::binary(total / static_cast<double>(used), Method::OracleMean);
  }
  return out;
}

}  // namespace qlr
