#include "qlr/random.hpp"

#include "qlr/quantum.hpp"

namespace qlr {

double SuiteRng::unit_open_closed() {
  // 53 random bits mapped to {1, ..., 2^53} * 2^-53.
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double SuiteRng::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::int64_t SuiteRng::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t r = engine_();
  while (r >= limit) r = engine_();
  return lo + static_cast<std::int64_t>(r % span);
}

ContingencyTable random_table(SuiteRng& rng, std::size_t features, std::size_t hypotheses) {
  Matrix x(static_cast<Eigen::Index>(features), static_cast<Eigen::Index>(hypotheses));
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index a = 0; a < x.cols(); ++a) x(i, a) = rng.unit_open_closed();
  }
  return ContingencyTable::make(std::move(x));
}

Matrix random_gram_matrix(SuiteRng& rng, std::size_t features, double min_eigen) {
  const auto m = static_cast<Eigen::Index>(features);
  for (;;) {
    Matrix v(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      double norm = 0.0;
      while (norm < 1e-3) {
        for (Eigen::Index k = 0; k < m; ++k) v(i, k) = rng.uniform(-1.0, 1.0);
        norm = v.row(i).norm();
      }
      v.row(i) /= norm;
    }
    Matrix c = v * v.transpose();
    c.diagonal().setOnes();
    c = (c + c.transpose()) / 2.0;
    if (min_eigenvalue(c) >= min_eigen) return c;
  }
}

}  // namespace qlr
