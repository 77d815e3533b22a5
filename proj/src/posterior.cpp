#include "qlr/posterior.hpp"

#include <cmath>
#include <sstream>

#include "qlr/error.hpp"

namespace qlr {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Bayes: return "bayes";
    case Method::Naive: return "naive";
    case Method::MeanFrequency: return "mean_frequency";
    case Method::MeanRange: return "mean_range";
    case Method::Quantum: return "quantum";
    case Method::Wavefunction: return "wavefunction";
    case Method::OracleMean: return "oracle_mean";
  }
  return "unknown";
}

PosteriorDistribution::PosteriorDistribution(Vector probabilities, Method method)
    : probabilities_(std::move(probabilities)), method_(method), argmax_(0) {
  for (Eigen::Index a = 1; a < probabilities_.size(); ++a) {
    if (probabilities_(a) > probabilities_(static_cast<Eigen::Index>(argmax_))) {
      argmax_ = static_cast<std::size_t>(a);
    }
  }
}

PosteriorDistribution PosteriorDistribution::from_weights(const Vector& weights, Method method) {
  double total = 0.0;
  for (Eigen::Index a = 0; a < weights.size(); ++a) {
    if (!(weights(a) >= 0.0) || !std::isfinite(weights(a))) {
      std::ostringstream out;
      out << to_string(method) << ": weight of hypothesis " << a << " is " << weights(a);
      throw Error(ErrorKind::NonPositiveTotal, out.str());
    }
    total += weights(a);
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw Error(ErrorKind::NonPositiveTotal,
                std::string(to_string(method)) + ": weights have no positive total");
  }
  return PosteriorDistribution(weights / total, method);
}

PosteriorDistribution PosteriorDistribution::binary(double p1, Method method) {
  Vector p(2);
  p << p1, 1.0 - p1;
  return PosteriorDistribution(std::move(p), method);
}

}  // namespace qlr
