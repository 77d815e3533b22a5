#ifndef QLR_ORACLE_HPP
#define QLR_ORACLE_HPP

// Brute-force enumeration over integer joint counts. Nothing here calls the
// closed forms in tables/classical; it is the reference they are checked
// against.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qlr/posterior.hpp"
#include "qlr/tables.hpp"

namespace qlr {

/// Every k such that the 2x2 joint table (k, n_i - k, n_j - k, n - n_i - n_j + k)
/// has no negative cell.
std::vector<std::int64_t> enumerate_joint_counts(const CountTable& counts, std::size_t hypothesis,
                                                 std::size_t feature_i, std::size_t feature_j);

struct HypothesisEnumeration {
  std::vector<std::int64_t> feasible;
  /// Smallest and largest feasible probability k / n.
  std::pair<double, double> endpoint_probabilities;
  /// Mean of k / n over the feasible counts.
  double enumeration_mean = 0.0;
};

struct EnumerationResult {
  std::vector<HypothesisEnumeration> per_hypothesis;
};

/// Features 0 and 1 of every hypothesis.
EnumerationResult enumerate(const CountTable& counts);

struct OracleEstimates {
  PosteriorDistribution mean_frequency;
  /// Binary tables only; empty when n != 2 or no feasible pair is usable.
  std::optional<PosteriorDistribution> mean_range;
  /// Uniform average of P_1 over all feasible (k1, k2); binary only.
  std::optional<PosteriorDistribution> enumeration_mean;
  /// Feasible (k1, k2) pairs whose weighted denominator is zero. Skipped.
  std::uint64_t degenerate_pairs = 0;
};

/// Mean estimators recomputed by enumeration. Requires two features
/// (Unsupported otherwise). Priors default to population shares.
OracleEstimates oracle_mean_estimators(const CountTable& counts,
                                       std::optional<Vector> priors = std::nullopt);

}  // namespace qlr

#endif  // QLR_ORACLE_HPP
