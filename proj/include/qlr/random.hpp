#ifndef QLR_RANDOM_HPP
#define QLR_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "qlr/tables.hpp"

namespace qlr {

/// Seeded generator for the randomized suites. The value mappings below use
/// only the raw 64-bit output so results are identical across standard
/// library implementations.
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on (0, 1].
  double unit_open_closed();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer on [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Random m x n table with cells in (0, 1] and uniform priors.
ContingencyTable random_table(SuiteRng& rng, std::size_t features, std::size_t hypotheses);

/// Random unit-diagonal Gram matrix of m random unit vectors, redrawn until
/// its smallest eigenvalue is at least `min_eigenvalue`.
Matrix random_gram_matrix(SuiteRng& rng, std::size_t features, double min_eigenvalue = 0.05);

}  // namespace qlr

#endif  // QLR_RANDOM_HPP
