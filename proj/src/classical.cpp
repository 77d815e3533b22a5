#include "qlr/classical.hpp"

#include <sstream>

#include "qlr/error.hpp"

namespace qlr {

namespace {

void require_two_features(const CountTable& counts, const char* what) {
  if (counts.features() != 2) {
    std::ostringstream out;
    out << what << " needs exactly 2 features, table has " << counts.features();
    throw Error(ErrorKind::Unsupported, out.str());
  }
}

Vector resolve_priors(const CountTable& counts, std::optional<Vector> priors) {
  if (!priors) return counts.population_priors();
  // Validation through the table type keeps one definition of valid priors.
  Matrix ones = Matrix::Ones(1, static_cast<Eigen::Index>(counts.hypotheses()));
  return ContingencyTable::make(std::move(ones), std::move(priors)).priors();
}

// prior_a * k / n_a: a feasible intersection count expressed as a
// prior-weighted probability.
double weighted(const CountTable& counts, const Vector& priors, std::size_t a, std::int64_t k) {
  return priors(static_cast<Eigen::Index>(a)) * static_cast<double>(k) /
         static_cast<double>(counts.population(a));
}

}  // namespace

PosteriorDistribution bayes_posterior(const ContingencyTable& table, std::size_t feature) {
  if (feature >= table.features()) {
    std::ostringstream out;
    out << "feature " << feature << " out of range (table has " << table.features() << ")";
    throw Error(ErrorKind::BadIndex, out.str());
  }
  Vector w(static_cast<Eigen::Index>(table.hypotheses()));
  for (std::size_t a = 0; a < table.hypotheses(); ++a) {
    w(static_cast<Eigen::Index>(a)) = table.priors()(static_cast<Eigen::Index>(a)) * table(feature, a);
  }
  return PosteriorDistribution::from_weights(w, Method::Bayes);
}

PosteriorDistribution naive_posterior(const ContingencyTable& table) {
  Vector w = table.priors();
  for (std::size_t a = 0; a < table.hypotheses(); ++a) {
    for (std::size_t i = 0; i < table.features(); ++i) w(static_cast<Eigen::Index>(a)) *= table(i, a);
  }
  return PosteriorDistribution::from_weights(w, Method::Naive);
}

PosteriorDistribution mean_frequency_posterior(const CountTable& counts,
                                               std::optional<Vector> priors) {
  require_two_features(counts, "mean-frequency estimator");
  const Vector p = resolve_priors(counts, std::move(priors));
  Vector w(static_cast<Eigen::Index>(counts.hypotheses()));
  for (std::size_t a = 0; a < counts.hypotheses(); ++a) {
    const auto range = intersection_range(counts, a, 0, 1);
    // Mean of the consecutive integers lo..hi; a half-integer, so exact.
    const double mean = static_cast<double>(range.lo + range.hi) / 2.0;
    w(static_cast<Eigen::Index>(a)) =
        p(static_cast<Eigen::Index>(a)) * (mean / static_cast<double>(counts.population(a)));
  }
  if (!(w.sum() > 0.0)) {
    throw Error(ErrorKind::DegenerateRange, "every hypothesis has an empty mean intersection");
  }
  return PosteriorDistribution::from_weights(w, Method::MeanFrequency);
}

PosteriorDistribution mean_range_posterior(const CountTable& counts,
                                           std::optional<Vector> priors) {
  require_two_features(counts, "mean-range estimator");
  if (counts.hypotheses() != 2) {
    std::ostringstream out;
    out << "mean-range estimator needs exactly 2 hypotheses, table has " << counts.hypotheses();
    throw Error(ErrorKind::Unsupported, out.str());
  }
  const Vector p = resolve_priors(counts, std::move(priors));
  const auto r1 = intersection_range(counts, 0, 0, 1);
  const auto r2 = intersection_range(counts, 1, 0, 1);

  const double lo1 = weighted(counts, p, 0, r1.lo);
  const double hi1 = weighted(counts, p, 0, r1.hi);
  const double lo2 = weighted(counts, p, 1, r2.lo);
  const double hi2 = weighted(counts, p, 1, r2.hi);
  if (!(lo1 + hi2 > 0.0) || !(hi1 + lo2 > 0.0)) {
    throw Error(ErrorKind::DegenerateRange,
                "an extreme of the probability range has a zero denominator");
  }
  const double min_p1 = lo1 / (lo1 + hi2);
  const double max_p1 = hi1 / (hi1 + lo2);
  return PosteriorDistribution::binary((min_p1 + max_p1) / 2.0, Method::MeanRange);
}

}  // namespace qlr
