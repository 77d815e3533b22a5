#ifndef QLR_CLASSICAL_HPP
#define QLR_CLASSICAL_HPP

#include <cstddef>
#include <optional>

#include "qlr/posterior.hpp"
#include "qlr/tables.hpp"

namespace qlr {

/// Bayes' rule for a single observed feature:
/// P(H_a | D_i) = prior_a x[i][a] / sum_b prior_b x[i][b].
PosteriorDistribution bayes_posterior(const ContingencyTable& table, std::size_t feature);

/// Naive product classifier: prior_a * prod_i x[i][a], normalized.
PosteriorDistribution naive_posterior(const ContingencyTable& table);

/// Mean of the feasible intersection counts of the two features, divided by
/// the population, weighted by the prior of each hypothesis. Requires exactly
/// two features; any number of hypotheses. Priors default to population shares.
PosteriorDistribution mean_frequency_posterior(const CountTable& counts,
                                               std::optional<Vector> priors = std::nullopt);

/// Midpoint of the smallest and largest attainable P(H_1 | D_1 and D_2), where
/// the extremes pair one hypothesis' lowest intersection with the other's
/// highest. Binary only: exactly two features and two hypotheses.
PosteriorDistribution mean_range_posterior(const CountTable& counts,
                                           std::optional<Vector> priors = std::nullopt);

}  // namespace qlr

#endif  // QLR_CLASSICAL_HPP
