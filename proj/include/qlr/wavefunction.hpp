#ifndef QLR_WAVEFUNCTION_HPP
#define QLR_WAVEFUNCTION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qlr/posterior.hpp"
#include "qlr/quantum.hpp"
#include "qlr/tables.hpp"

namespace qlr {

/// Tolerance on the orthonormality and back-substitution residuals.
inline constexpr double kResidualTolerance = 1e-10;

/// Per-hypothesis change of basis K_i = sum_k A(i, k) |H_a (x) D_k> turning
/// the overlapping feature states into an orthonormal set: A c A^T = I.
struct OrthonormalBasis {
  std::vector<Matrix> A;
  OverlapMatrix source_overlap;

  /// max |A c A^T - I| over all hypotheses.
  double residual() const;
};

/// Amplitudes b[a](i) on the orthonormal basis, and N = sum of b^2.
struct StateVector {
  std::vector<Vector> b;
  double normalization = 0.0;
};

/// Modified Gram-Schmidt in the inner product defined by each block of
/// `overlap`, processing features in index order with one
/// re-orthogonalization pass. Throws NotPositiveDefiniteError for the first
/// hypothesis whose block has an eigenvalue <= 1e-12.
OrthonormalBasis gram_schmidt_basis(const OverlapMatrix& overlap);

/// b[a] = A[a] c[a] sqrt(x[:, a]), the amplitudes reproducing the table
/// entries: sum_i b[a](i) A[a](i, k) = sqrt(x[k][a]).
StateVector solve_b_coefficients(const ContingencyTable& table, const OrthonormalBasis& basis);

/// max |sum_i b[a](i) A[a](i, k) - sqrt(x[k][a])|.
double backsubstitution_residual(const ContingencyTable& table, const OrthonormalBasis& basis,
                                 const StateVector& state);

/// Posterior from the collapsed state: w_a sum_i b[a](i)^2, normalized.
PosteriorDistribution posterior_via_wavefunction(const ContingencyTable& table,
                                                 const OverlapMatrix& overlap);

/// Single observed feature on exclusive data: builds the state over
/// |H_a (x) D> and |H_a (x) not D>, projects onto the observed subspace and
/// renormalizes. Agrees with bayes_posterior.
PosteriorDistribution posterior_independent(const ContingencyTable& table, std::size_t feature);

struct CrossPathReport {
  std::uint64_t samples = 0;
  double max_posterior_deviation = 0.0;
  double max_basis_residual = 0.0;
  double max_backsubstitution_residual = 0.0;
  double max_normalization_deviation = 0.0;

  bool ok() const;
};

/// Random tables (2-4 hypotheses x 2-3 features) with random positive
/// definite overlaps; compares the wavefunction path with posterior_general.
CrossPathReport verify_cross_path(std::uint64_t sample_count, std::uint64_t seed);

}  // namespace qlr

#endif  // QLR_WAVEFUNCTION_HPP
