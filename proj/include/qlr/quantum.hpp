#ifndef QLR_QUANTUM_HPP
#define QLR_QUANTUM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlr/posterior.hpp"
#include "qlr/tables.hpp"

namespace qlr {

/// Eigenvalue floor for a Gram matrix to count as positive definite.
inline constexpr double kPositiveDefiniteFloor = 1e-12;

/// Inner products c[a](i, j) = <H_a (x) D_i | H_a (x) D_j> between the feature
/// states of each hypothesis. Each block is symmetric with a unit diagonal.
class OverlapMatrix {
 public:
  /// Validates every block (InvalidOverlap on a non-unit diagonal, asymmetry,
  /// non-finite entries or blocks of differing sizes).
  explicit OverlapMatrix(std::vector<Matrix> blocks);

  /// All off-diagonal overlaps zero: independent features.
  static OverlapMatrix identity(std::size_t features, std::size_t hypotheses);

  /// Two features: block a has off-diagonal entry offdiag[a].
  static OverlapMatrix from_pairs(const std::vector<double>& offdiag);

  std::size_t features() const { return features_; }
  std::size_t hypotheses() const { return blocks_.size(); }
  const Matrix& block(std::size_t hypothesis) const { return blocks_.at(hypothesis); }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  /// Off-diagonal entries multiplied by `factor`; the diagonal stays 1.
  OverlapMatrix scaled(double factor) const;

 private:
  std::vector<Matrix> blocks_;
  std::size_t features_ = 0;
};

double min_eigenvalue(const Matrix& symmetric);
bool is_positive_definite(const Matrix& symmetric);

struct CoefficientDiagnostics {
  /// Upper-triangle off-diagonal values per hypothesis, row-major.
  std::vector<std::vector<double>> values;
  /// |c| < 1 for each entry of `values`.
  std::vector<std::vector<bool>> within_unit_interval;
  std::vector<bool> gram_positive_definite;

  bool all_within_unit_interval() const;
};

CoefficientDiagnostics diagnose(const OverlapMatrix& overlap);

struct CoefficientPair {
  double c1 = 0.0;
  double c2 = 0.0;
  CoefficientDiagnostics diagnostics;
};

/// Closed-form overlaps for a 2 features x 2 hypotheses table, with
/// x1 = x[0][0], y1 = x[1][0], x2 = x[0][1], y2 = x[1][1]:
///   c1 = sqrt(x1 y1) / (2 x2 y2),   c2 = sqrt(x2 y2) / (2 x1 y1).
CoefficientPair overlap_coefficients(const ContingencyTable& table);

/// Off-diagonal overlaps scaled by (1 - exp(-hbar)). hbar = 0 switches the
/// overlaps off; large hbar leaves them unchanged. InvalidHbar when hbar < 0.
std::pair<double, double> hbar_moderated_coefficients(double c1, double c2, double hbar);
double hbar_factor(double hbar);

/// Posterior for a 2x2 table with the closed-form overlaps. Block a is
/// w_a * (r_a + x[0][a] + x[1][a]) with r_1 = x1 y1 / (x2 y2), r_2 = 1 / r_1
/// computed as x2 y2 / (x1 y1). With `hbar`, the overlaps are moderated first
/// and the posterior goes through posterior_general.
PosteriorDistribution posterior_2x2(const ContingencyTable& table,
                                    std::optional<double> hbar = std::nullopt);

/// Sum over i, j of sqrt(x[i][a] x[j][a]) c[a](i, j) for one hypothesis.
double overlap_block_sum(const ContingencyTable& table, const OverlapMatrix& overlap,
                         std::size_t hypothesis);

/// General co-dependent posterior: P(H_a) proportional to w_a times the
/// hypothesis' overlap block sum, w_a = prior_a * n.
PosteriorDistribution posterior_general(const ContingencyTable& table,
                                        const OverlapMatrix& overlap);

/// Result of one randomized identity check.
struct CheckResult {
  std::string name;
  std::uint64_t samples = 0;
  std::uint64_t passed = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;

  bool ok() const { return samples > 0 && passed == samples; }
};

struct ConstraintReport {
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

using Posterior2x2Fn = std::function<PosteriorDistribution(const ContingencyTable&)>;

/// Randomized check of the structural constraints the 2x2 posterior must
/// satisfy: the five known-value table shapes, row-swap invariance,
/// column-swap exchange, complementarity and the coefficient functional
/// equation. `posterior` defaults to posterior_2x2 and can be replaced to
/// check an alternative formula.
ConstraintReport verify_constraint_suite(std::uint64_t sample_count, std::uint64_t seed,
                                         const Posterior2x2Fn& posterior = {});

}  // namespace qlr

#endif  // QLR_QUANTUM_HPP
