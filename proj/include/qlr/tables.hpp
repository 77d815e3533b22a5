#ifndef QLR_TABLES_HPP
#define QLR_TABLES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qlr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using Labels = std::vector<std::string>;

/// Largest population accepted by CountTable. Keeps count/population
/// ratios exact enough that round(x * population) recovers the count.
inline constexpr std::int64_t kMaxPopulation = 1'000'000;

/// Tolerance on the prior weights summing to one.
inline constexpr double kPriorSumTolerance = 1e-12;

/// Feature-by-hypothesis grid of conditional probabilities P(D_i | H_a)
/// together with the prior weight of each hypothesis. Rows are features,
/// columns are hypotheses. Immutable once built; every cell lies in (0, 1].
class ContingencyTable {
 public:
  /// Validates and builds a table. Uniform priors are used when `priors` is
  /// empty; labels default to D1.., H1.. when empty.
  static ContingencyTable make(Matrix x, std::optional<Vector> priors = std::nullopt,
                               Labels features = {}, Labels hypotheses = {});

  std::size_t features() const { return static_cast<std::size_t>(x_.rows()); }
  std::size_t hypotheses() const { return static_cast<std::size_t>(x_.cols()); }

  double operator()(std::size_t feature, std::size_t hypothesis) const {
    return x_(static_cast<Eigen::Index>(feature), static_cast<Eigen::Index>(hypothesis));
  }

  const Matrix& x() const { return x_; }
  const Vector& priors() const { return priors_; }
  const Labels& feature_labels() const { return feature_labels_; }
  const Labels& hypothesis_labels() const { return hypothesis_labels_; }

  /// Same cells and labels with a different prior vector (validated).
  ContingencyTable with_priors(Vector priors) const;

  /// Prior weights rescaled so that uniform priors give weight 1 to every
  /// hypothesis: w_a = prior_a * n.
  Vector block_weights() const;

 private:
  ContingencyTable(Matrix x, Vector priors, Labels features, Labels hypotheses)
      : x_(std::move(x)),
        priors_(std::move(priors)),
        feature_labels_(std::move(features)),
        hypothesis_labels_(std::move(hypotheses)) {}

  Matrix x_;
  Vector priors_;
  Labels feature_labels_;
  Labels hypothesis_labels_;
};

/// Integer feature counts n(D_i | H_a) and hypothesis populations n(H_a).
class CountTable {
 public:
  static CountTable make(CountMatrix counts, std::vector<std::int64_t> populations,
                         Labels features = {}, Labels hypotheses = {});

  std::size_t features() const { return static_cast<std::size_t>(counts_.rows()); }
  std::size_t hypotheses() const { return static_cast<std::size_t>(counts_.cols()); }

  std::int64_t count(std::size_t feature, std::size_t hypothesis) const {
    return counts_(static_cast<Eigen::Index>(feature), static_cast<Eigen::Index>(hypothesis));
  }
  std::int64_t population(std::size_t hypothesis) const { return populations_.at(hypothesis); }

  const CountMatrix& counts() const { return counts_; }
  const std::vector<std::int64_t>& populations() const { return populations_; }
  const Labels& feature_labels() const { return feature_labels_; }
  const Labels& hypothesis_labels() const { return hypothesis_labels_; }

  /// Population shares n(H_a) / sum_b n(H_b).
  Vector population_priors() const;

 private:
  CountTable(CountMatrix counts, std::vector<std::int64_t> populations, Labels features,
             Labels hypotheses)
      : counts_(std::move(counts)),
        populations_(std::move(populations)),
        feature_labels_(std::move(features)),
        hypothesis_labels_(std::move(hypotheses)) {}

  CountMatrix counts_;
  std::vector<std::int64_t> populations_;
  Labels feature_labels_;
  Labels hypothesis_labels_;
};

/// Inclusive integer interval [lo, hi].
struct IntegerRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t size() const { return hi - lo + 1; }
  friend bool operator==(const IntegerRange&, const IntegerRange&) = default;
};

/// x[i][a] = counts[i][a] / populations[a]; priors are population shares.
/// Zero counts are rejected (InvalidCell).
ContingencyTable from_counts(const CountTable& counts);

/// Feasible values of n(D_i and D_j | H_a) given only the marginal counts:
/// [max(0, n_i + n_j - n), min(n_i, n_j)].
IntegerRange intersection_range(const CountTable& counts, std::size_t hypothesis,
                                std::size_t feature_i, std::size_t feature_j);

}  // namespace qlr

#endif  // QLR_TABLES_HPP
