#include "qlr/tables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qlr/error.hpp"

namespace qlr {

namespace {

Labels default_labels(const char* prefix, std::size_t count) {
  Labels labels;
  labels.reserve(count);
  for (std::size_t k = 0; k < count; ++k) labels.push_back(prefix + std::to_string(k + 1));
  return labels;
}

Labels checked_labels(Labels labels, const char* prefix, std::size_t count, const char* what) {
  if (labels.empty()) return default_labels(prefix, count);
  if (labels.size() != count) {
    std::ostringstream out;
    out << "expected " << count << " " << what << " labels, got " << labels.size();
    throw Error(ErrorKind::BadShape, out.str());
  }
  return labels;
}

void check_priors(const Vector& priors, Eigen::Index hypotheses) {
  if (priors.size() != hypotheses) {
    std::ostringstream out;
    out << "expected " << hypotheses << " priors, got " << priors.size();
    throw Error(ErrorKind::BadShape, out.str());
  }
  double sum = 0.0;
  for (Eigen::Index a = 0; a < priors.size(); ++a) {
    if (!std::isfinite(priors(a)) || priors(a) < 0.0) {
      std::ostringstream out;
      out << "prior " << a << " is " << priors(a);
      throw Error(ErrorKind::InvalidPriors, out.str());
    }
    sum += priors(a);
  }
  if (std::abs(sum - 1.0) > kPriorSumTolerance) {
    std::ostringstream out;
    out.precision(17);
    out << "priors sum to " << sum << ", not 1";
    throw Error(ErrorKind::InvalidPriors, out.str());
  }
}

}  // namespace

ContingencyTable ContingencyTable::make(Matrix x, std::optional<Vector> priors, Labels features,
                                        Labels hypotheses) {
  if (x.rows() < 1) throw Error(ErrorKind::BadShape, "a table needs at least one feature");
  if (x.cols() < 2) throw Error(ErrorKind::BadShape, "a table needs at least two hypotheses");
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index a = 0; a < x.cols(); ++a) {
      const double v = x(i, a);
      if (!(v > 0.0 && v <= 1.0)) {
        std::ostringstream out;
        out << "x[" << i << "][" << a << "] = " << v << " is outside (0, 1]";
        throw Error(ErrorKind::InvalidCell, out.str());
      }
    }
  }
  Vector p = priors ? std::move(*priors)
                    : Vector::Constant(x.cols(), 1.0 / static_cast<double>(x.cols()));
  check_priors(p, x.cols());
  auto f = checked_labels(std::move(features), "D", static_cast<std::size_t>(x.rows()), "feature");
  auto h = checked_labels(std::move(hypotheses), "H", static_cast<std::size_t>(x.cols()),
                          "hypothesis");
  return ContingencyTable(std::move(x), std::move(p), std::move(f), std::move(h));
}

ContingencyTable ContingencyTable::with_priors(Vector priors) const {
  check_priors(priors, x_.cols());
  return ContingencyTable(x_, std::move(priors), feature_labels_, hypothesis_labels_);
}

Vector ContingencyTable::block_weights() const {
  return priors_ * static_cast<double>(priors_.size());
}

CountTable CountTable::make(CountMatrix counts, std::vector<std::int64_t> populations,
                            Labels features, Labels hypotheses) {
  if (counts.rows() < 1) throw Error(ErrorKind::BadShape, "a table needs at least one feature");
  if (counts.cols() < 2) throw Error(ErrorKind::BadShape, "a table needs at least two hypotheses");
  if (static_cast<Eigen::Index>(populations.size()) != counts.cols()) {
    std::ostringstream out;
    out << "expected " << counts.cols() << " populations, got " << populations.size();
    throw Error(ErrorKind::BadShape, out.str());
  }
  for (std::size_t a = 0; a < populations.size(); ++a) {
    if (populations[a] <= 0 || populations[a] > kMaxPopulation) {
      std::ostringstream out;
      out << "population " << a << " = " << populations[a] << " is outside [1, " << kMaxPopulation
          << "]";
      throw Error(ErrorKind::InvalidCell, out.str());
    }
  }
  for (Eigen::Index i = 0; i < counts.rows(); ++i) {
    for (Eigen::Index a = 0; a < counts.cols(); ++a) {
      const auto v = counts(i, a);
      if (v < 0 || v > populations[static_cast<std::size_t>(a)]) {
        std::ostringstream out;
        out << "count[" << i << "][" << a << "] = " << v << " is outside [0, "
            << populations[static_cast<std::size_t>(a)] << "]";
        throw Error(ErrorKind::InvalidCell, out.str());
      }
    }
  }
  auto f = checked_labels(std::move(features), "D", static_cast<std::size_t>(counts.rows()),
                          "feature");
  auto h = checked_labels(std::move(hypotheses), "H", static_cast<std::size_t>(counts.cols()),
                          "hypothesis");
  return CountTable(std::move(counts), std::move(populations), std::move(f), std::move(h));
}

Vector CountTable::population_priors() const {
  std::int64_t total = 0;
  for (auto p : populations_) total += p;
  Vector priors(static_cast<Eigen::Index>(populations_.size()));
  for (std::size_t a = 0; a < populations_.size(); ++a) {
    priors(static_cast<Eigen::Index>(a)) =
        static_cast<double>(populations_[a]) / static_cast<double>(total);
  }
  return priors;
}

ContingencyTable from_counts(const CountTable& counts) {
  Matrix x(counts.counts().rows(), counts.counts().cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index a = 0; a < x.cols(); ++a) {
      const auto c = counts.counts()(i, a);
      if (c == 0) {
        std::ostringstream out;
        out << "count[" << i << "][" << a << "] is zero";
        throw Error(ErrorKind::InvalidCell, out.str());
      }
      x(i, a) = static_cast<double>(c) /
                static_cast<double>(counts.population(static_cast<std::size_t>(a)));
    }
  }
  Vector priors = counts.population_priors();
  // Population shares can miss 1 by an ulp or two; pull the sum back.
  priors /= priors.sum();
  return ContingencyTable::make(std::move(x), std::move(priors), counts.feature_labels(),
                                counts.hypothesis_labels());
}

IntegerRange intersection_range(const CountTable& counts, std::size_t hypothesis,
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
  return IntegerRange{std::max<std::int64_t>(0, ni + nj - n), std::min(ni, nj)};
}

}  // namespace qlr
