#include "qlr/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qlr/error.hpp"
#include "qlr/random.hpp"

namespace qlr {

namespace {

void require_same_shape(const ContingencyTable& table, const OverlapMatrix& overlap) {
  if (overlap.hypotheses() != table.hypotheses() || overlap.features() != table.features()) {
    std::ostringstream out;
    out << "overlap is " << overlap.features() << " features x " << overlap.hypotheses()
        << " hypotheses, table is " << table.features() << " x " << table.hypotheses();
    throw Error(ErrorKind::ShapeMismatch, out.str());
  }
}

Vector sqrt_column(const ContingencyTable& table, std::size_t hypothesis) {
  return table.x().col(static_cast<Eigen::Index>(hypothesis)).cwiseSqrt();
}

}  // namespace

double OrthonormalBasis::residual() const {
  double worst = 0.0;
  for (std::size_t a = 0; a < A.size(); ++a) {
    const Matrix& c = source_overlap.block(a);
    const Matrix r = A[a] * c * A[a].transpose() - Matrix::Identity(c.rows(), c.cols());
    worst = std::max(worst, r.cwiseAbs().maxCoeff());
  }
  return worst;
}

OrthonormalBasis gram_schmidt_basis(const OverlapMatrix& overlap) {
  std::vector<Matrix> bases;
  bases.reserve(overlap.hypotheses());
  for (std::size_t a = 0; a < overlap.hypotheses(); ++a) {
    const Matrix& c = overlap.block(a);
    const double lowest = min_eigenvalue(c);
    if (!(lowest > kPositiveDefiniteFloor)) throw NotPositiveDefiniteError(a, lowest);

    const Eigen::Index m = c.rows();
    Matrix A = Matrix::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      Vector u = Vector::Unit(m, i);
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index j = 0; j < i; ++j) {
          const Vector q = A.row(j).transpose();
          u -= q.dot(c * u) * q;
        }
      }
      const double norm2 = u.dot(c * u);
      if (!(norm2 > 0.0)) throw NotPositiveDefiniteError(a, lowest);
      A.row(i) = (u / std::sqrt(norm2)).transpose();
    }
    bases.push_back(std::move(A));
  }
  return OrthonormalBasis{std::move(bases), overlap};
}

StateVector solve_b_coefficients(const ContingencyTable& table, const OrthonormalBasis& basis) {
  require_same_shape(table, basis.source_overlap);
  StateVector state;
  state.b.reserve(table.hypotheses());
  for (std::size_t a = 0; a < table.hypotheses(); ++a) {
    // b_j = sum_{k,k'} sqrt(x_k) A(j, k') c(k, k').
    Vector b = basis.A[a] * basis.source_overlap.block(a) * sqrt_column(table, a);
    state.normalization += b.squaredNorm();
    state.b.push_back(std::move(b));
  }
  return state;
}

double backsubstitution_residual(const ContingencyTable& table, const OrthonormalBasis& basis,
                                 const StateVector& state) {
  double worst = 0.0;
  for (std::size_t a = 0; a < table.hypotheses(); ++a) {
    const Vector r = basis.A[a].transpose() * state.b[a] - sqrt_column(table, a);
    worst = std::max(worst, r.cwiseAbs().maxCoeff());
  }
  return worst;
}

PosteriorDistribution posterior_via_wavefunction(const ContingencyTable& table,
                                                 const OverlapMatrix& overlap) {
  require_same_shape(table, overlap);
  const auto basis = gram_schmidt_basis(overlap);
  const auto state = solve_b_coefficients(table, basis);
  const Vector w = table.block_weights();
  Vector weighted(static_cast<Eigen::Index>(table.hypotheses()));
  for (std::size_t a = 0; a < table.hypotheses(); ++a) {
    weighted(static_cast<Eigen::Index>(a)) = w(static_cast<Eigen::Index>(a)) * state.b[a].squaredNorm();
  }
  return PosteriorDistribution::from_weights(weighted, Method::Wavefunction);
}

PosteriorDistribution posterior_independent(const ContingencyTable& table, std::size_t feature) {
  if (feature >= table.features()) {
    std::ostringstream out;
    out << "feature " << feature << " out of range (table has " << table.features() << ")";
    throw Error(ErrorKind::BadIndex, out.str());
  }
  const auto n = static_cast<Eigen::Index>(table.hypotheses());
  const Vector w = table.block_weights();

  // Orthonormal states |H_a (x) D> and |H_a (x) not D> with amplitudes
  // sqrt(w_a x) and sqrt(w_a (1 - x)).
  Vector observed(n), unobserved(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const double x = table(feature, static_cast<std::size_t>(a));
    observed(a) = std::sqrt(w(a) * x);
    unobserved(a) = std::sqrt(w(a) * (1.0 - x));
  }
  const double norm = observed.squaredNorm() + unobserved.squaredNorm();

  // Projection onto the observed subspace, then renormalization.
  const Vector projected = observed / std::sqrt(norm);
  const double collapsed_norm = projected.squaredNorm();
  const Vector collapsed = projected / std::sqrt(collapsed_norm);
  return PosteriorDistribution::from_weights(collapsed.cwiseAbs2(), Method::Wavefunction);
}

bool CrossPathReport::ok() const {
  return samples > 0 && max_posterior_deviation < kResidualTolerance &&
         max_basis_residual < kResidualTolerance &&
         max_backsubstitution_residual < kResidualTolerance &&
         max_normalization_deviation < kResidualTolerance;
}

CrossPathReport verify_cross_path(std::uint64_t sample_count, std::uint64_t seed) {
  CrossPathReport report;
  SuiteRng rng(seed);
  for (std::uint64_t s = 0; s < sample_count; ++s) {
    const auto hypotheses = static_cast<std::size_t>(rng.integer(2, 4));
    const auto features = static_cast<std::size_t>(rng.integer(2, 3));
    const auto table = random_table(rng, features, hypotheses);
    std::vector<Matrix> blocks;
    for (std::size_t a = 0; a < hypotheses; ++a) blocks.push_back(random_gram_matrix(rng, features));
    const OverlapMatrix overlap(std::move(blocks));

    const auto general = posterior_general(table, overlap);
    const auto wave = posterior_via_wavefunction(table, overlap);
    const auto basis = gram_schmidt_basis(overlap);
    const auto state = solve_b_coefficients(table, basis);

    double direct = 0.0;
    for (std::size_t a = 0; a < hypotheses; ++a) direct += overlap_block_sum(table, overlap, a);

    ++report.samples;
    report.max_posterior_deviation =
        std::max(report.max_posterior_deviation,
                 (wave.probabilities() - general.probabilities()).cwiseAbs().maxCoeff());
    report.max_basis_residual = std::max(report.max_basis_residual, basis.residual());
    report.max_backsubstitution_residual = std::max(
        report.max_backsubstitution_residual, backsubstitution_residual(table, basis, state));
    report.max_normalization_deviation =
        std::max(report.max_normalization_deviation, std::abs(state.normalization - direct));
  }
  return report;
}

}  // namespace qlr
