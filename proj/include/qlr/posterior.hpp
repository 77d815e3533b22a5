#ifndef QLR_POSTERIOR_HPP
#define QLR_POSTERIOR_HPP

#include <cstddef>
#include <string_view>

#include "qlr/tables.hpp"

namespace qlr {

enum class Method {
  Bayes,
  Naive,
  MeanFrequency,
  MeanRange,
  Quantum,
  Wavefunction,
  OracleMean,
};

std::string_view to_string(Method method);

/// Tolerance on a posterior summing to one.
inline constexpr double kNormalizationTolerance = 1e-12;

/// Probability of each hypothesis, tagged with the estimator that produced it.
class PosteriorDistribution {
 public:
  /// Normalizes nonnegative weights. Throws NonPositiveTotal when the weights
  /// do not have a positive finite sum.
  static PosteriorDistribution from_weights(const Vector& weights, Method method);

  /// Builds a binary distribution (p, 1 - p).
  static PosteriorDistribution binary(double p1, Method method);

  const Vector& probabilities() const { return probabilities_; }
  double operator[](std::size_t hypothesis) const {
    return probabilities_(static_cast<Eigen::Index>(hypothesis));
  }
  std::size_t size() const { return static_cast<std::size_t>(probabilities_.size()); }
  Method method() const { return method_; }

  /// Smallest index attaining the maximum probability.
  std::size_t argmax_index() const { return argmax_; }

 private:
  PosteriorDistribution(Vector probabilities, Method method);

  Vector probabilities_;
  Method method_;
  std::size_t argmax_;
};

}  // namespace qlr

#endif  // QLR_POSTERIOR_HPP
