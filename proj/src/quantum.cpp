#include "qlr/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qlr/error.hpp"
#include "qlr/random.hpp"

namespace qlr {

namespace {

constexpr double kUnitDiagonalTolerance = 1e-12;
constexpr double kSymmetryTolerance = 1e-12;
constexpr double kIdentityTolerance = 1e-10;

void require_2x2(const ContingencyTable& table, const char* what) {
  if (table.features() != 2 || table.hypotheses() != 2) {
    std::ostringstream out;
    out << what << " is derived for 2 features x 2 hypotheses only, table is "
        << table.features() << " x " << table.hypotheses();
    throw Error(ErrorKind::Unsupported, out.str());
  }
}

}  // namespace

OverlapMatrix::OverlapMatrix(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorKind::InvalidOverlap, "no hypothesis blocks");
  features_ = static_cast<std::size_t>(blocks_.front().rows());
  if (features_ == 0) throw Error(ErrorKind::InvalidOverlap, "empty block");
  for (std::size_t a = 0; a < blocks_.size(); ++a) {
    const Matrix& c = blocks_[a];
    if (static_cast<std::size_t>(c.rows()) != features_ ||
        static_cast<std::size_t>(c.cols()) != features_) {
      std::ostringstream out;
      out << "block " << a << " is " << c.rows() << "x" << c.cols() << ", expected " << features_
          << "x" << features_;
      throw Error(ErrorKind::InvalidOverlap, out.str());
    }
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
      for (Eigen::Index j = 0; j < c.cols(); ++j) {
        std::ostringstream out;
        if (!std::isfinite(c(i, j))) {
          out << "c[" << a << "][" << i << "][" << j << "] is not finite";
          throw Error(ErrorKind::InvalidOverlap, out.str());
        }
        if (i == j && std::abs(c(i, i) - 1.0) > kUnitDiagonalTolerance) {
          out << "c[" << a << "][" << i << "][" << i << "] = " << c(i, i) << ", expected 1";
          throw Error(ErrorKind::InvalidOverlap, out.str());
        }
        if (std::abs(c(i, j) - c(j, i)) > kSymmetryTolerance) {
          out << "block " << a << " is not symmetric at (" << i << ", " << j << ")";
          throw Error(ErrorKind::InvalidOverlap, out.str());
        }
      }
    }
  }
}

OverlapMatrix OverlapMatrix::identity(std::size_t features, std::size_t hypotheses) {
  const auto m = static_cast<Eigen::Index>(features);
  return OverlapMatrix(std::vector<Matrix>(hypotheses, Matrix::Identity(m, m)));
}

OverlapMatrix OverlapMatrix::from_pairs(const std::vector<double>& offdiag) {
  std::vector<Matrix> blocks;
  blocks.reserve(offdiag.size());
  for (double c : offdiag) {
    Matrix block(2, 2);
    block << 1.0, c, c, 1.0;
    blocks.push_back(std::move(block));
  }
  return OverlapMatrix(std::move(blocks));
}

OverlapMatrix OverlapMatrix::scaled(double factor) const {
  std::vector<Matrix> blocks = blocks_;
  for (Matrix& c : blocks) {
    c *= factor;
    c.diagonal().setOnes();
  }
  return OverlapMatrix(std::move(blocks));
}

double min_eigenvalue(const Matrix& symmetric) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_positive_definite(const Matrix& symmetric) {
  return min_eigenvalue(symmetric) > kPositiveDefiniteFloor;
}

bool CoefficientDiagnostics::all_within_unit_interval() const {
  return std::all_of(within_unit_interval.begin(), within_unit_interval.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](bool b) { return b; });
  });
}

CoefficientDiagnostics diagnose(const OverlapMatrix& overlap) {
  CoefficientDiagnostics d;
  for (const Matrix& c : overlap.blocks()) {
    std::vector<double> values;
    std::vector<bool> within;
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < c.cols(); ++j) {
        values.push_back(c(i, j));
        within.push_back(std::abs(c(i, j)) < 1.0);
      }
    }
    d.values.push_back(std::move(values));
    d.within_unit_interval.push_back(std::move(within));
    d.gram_positive_definite.push_back(is_positive_definite(c));
  }
  return d;
}

CoefficientPair overlap_coefficients(const ContingencyTable& table) {
  require_2x2(table, "the closed-form overlap");
  const double x1 = table(0, 0), y1 = table(1, 0);
  const double x2 = table(0, 1), y2 = table(1, 1);
  CoefficientPair pair;
  pair.c1 = std::sqrt(x1 * y1) / (2.0 * x2 * y2);
  pair.c2 = std::sqrt(x2 * y2) / (2.0 * x1 * y1);
  pair.diagnostics = diagnose(OverlapMatrix::from_pairs({pair.c1, pair.c2}));
  return pair;
}

double hbar_factor(double hbar) {
  if (!(hbar >= 0.0)) {
    std::ostringstream out;
    out << "hbar must be nonnegative, got " << hbar;
    throw Error(ErrorKind::InvalidHbar, out.str());
  }
  return -std::expm1(-hbar);
}

std::pair<double, double> hbar_moderated_coefficients(double c1, double c2, double hbar) {
  const double f = hbar_factor(hbar);
  return {c1 * f, c2 * f};
}

PosteriorDistribution posterior_2x2(const ContingencyTable& table, std::optional<double> hbar) {
  require_2x2(table, "the closed-form posterior");
  if (hbar) {
    const auto pair = overlap_coefficients(table);
    const auto [c1, c2] = hbar_moderated_coefficients(pair.c1, pair.c2, *hbar);
    return posterior_general(table, OverlapMatrix::from_pairs({c1, c2}));
  }
  const double x1 = table(0, 0), y1 = table(1, 0);
  const double x2 = table(0, 1), y2 = table(1, 1);
  // 2 c_a sqrt(x_a y_a) collapses to the cross ratio of the two columns.
  const double block1 = (x1 * y1) / (x2 * y2) + (x1 + y1);
  const double block2 = (x2 * y2) / (x1 * y1) + (x2 + y2);
  const Vector w = table.block_weights();
  Vector weighted(2);
  weighted << w(0) * block1, w(1) * block2;
  return PosteriorDistribution::from_weights(weighted, Method::Quantum);
}

double overlap_block_sum(const ContingencyTable& table, const OverlapMatrix& overlap,
                         std::size_t hypothesis) {
  const Matrix& c = overlap.block(hypothesis);
  double sum = 0.0;
  for (std::size_t i = 0; i < table.features(); ++i) {
    // Diagonal terms reduce to x[i][a].
    sum += table(i, hypothesis);
    for (std::size_t j = i + 1; j < table.features(); ++j) {
      sum += 2.0 * std::sqrt(table(i, hypothesis) * table(j, hypothesis)) *
             c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return sum;
}

PosteriorDistribution posterior_general(const ContingencyTable& table,
                                        const OverlapMatrix& overlap) {
  if (overlap.hypotheses() != table.hypotheses() || overlap.features() != table.features()) {
    std::ostringstream out;
    out << "overlap is " << overlap.features() << " features x " << overlap.hypotheses()
        << " hypotheses, table is " << table.features() << " x " << table.hypotheses();
    throw Error(ErrorKind::ShapeMismatch, out.str());
  }
  const Vector w = table.block_weights();
  Vector weighted(static_cast<Eigen::Index>(table.hypotheses()));
  for (std::size_t a = 0; a < table.hypotheses(); ++a) {
    const double block = overlap_block_sum(table, overlap, a);
    if (!(block > 0.0)) {
      std::ostringstream out;
      out << "overlap block sum of hypothesis " << a << " is " << block;
      throw Error(ErrorKind::NonPositiveTotal, out.str());
    }
    weighted(static_cast<Eigen::Index>(a)) = w(static_cast<Eigen::Index>(a)) * block;
  }
  return PosteriorDistribution::from_weights(weighted, Method::Quantum);
}

bool ConstraintReport::all_passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

const CheckResult* ConstraintReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

class Check {
 public:
  Check(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  void record(double deviation) {
    ++result_.samples;
    if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
    if (deviation <= result_.tolerance) ++result_.passed;
    result_.max_deviation = std::max(result_.max_deviation, deviation);
  }

  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

ContingencyTable rows(double a, double b, double c, double d) {
  Matrix x(2, 2);
  x << a, b, c, d;
  return ContingencyTable::make(std::move(x));
}

}  // namespace

ConstraintReport verify_constraint_suite(std::uint64_t sample_count, std::uint64_t seed,
                                         const Posterior2x2Fn& posterior_fn) {
  const Posterior2x2Fn posterior =
      posterior_fn ? posterior_fn : [](const ContingencyTable& t) { return posterior_2x2(t); };

  Check unit_first("known_value_unit_first_row", kIdentityTolerance);
  Check unit_second("known_value_unit_second_row", kIdentityTolerance);
  Check crossed("known_value_crossed_half", kIdentityTolerance);
  Check rowwise("known_value_rowwise_half", kIdentityTolerance);
  Check uniform("known_value_uniform_half", kIdentityTolerance);
  Check row_swap("row_swap_invariance", 1e-12);
  Check column_swap("column_swap_exchange", 0.0);
  Check complementarity("complementarity", kNormalizationTolerance);
  Check functional("functional_equation", kIdentityTolerance);

  SuiteRng rng(seed);
  for (std::uint64_t s = 0; s < sample_count; ++s) {
    const double m = rng.unit_open_closed();
    const double n = rng.unit_open_closed();

    auto p1 = [&](const ContingencyTable& t) {
      const auto p = posterior(t);
      complementarity.record(std::abs(p.probabilities().sum() - 1.0));
      return p[0];
    };
    const double ratio = m / (m + n);
    unit_first.record(std::abs(p1(rows(1.0, 1.0, m, n)) - ratio));
    unit_second.record(std::abs(p1(rows(m, n, 1.0, 1.0)) - ratio));
    crossed.record(std::abs(p1(rows(n, m, m, n)) - 0.5));
    rowwise.record(std::abs(p1(rows(n, n, m, m)) - 0.5));
    uniform.record(std::abs(p1(rows(m, m, m, m)) - 0.5));

    const auto table = random_table(rng, 2, 2);
    const Matrix& x = table.x();
    const auto base = posterior(table);
    complementarity.record(std::abs(base.probabilities().sum() - 1.0));

    const auto swapped_rows = posterior(rows(x(1, 0), x(1, 1), x(0, 0), x(0, 1)));
    row_swap.record(std::abs(swapped_rows[0] - base[0]));

    const auto swapped_cols = posterior(rows(x(0, 1), x(0, 0), x(1, 1), x(1, 0)));
    column_swap.record(
        std::max(std::abs(swapped_cols[0] - base[1]), std::abs(swapped_cols[1] - base[0])));

    // g(m, n) = sqrt(n) c1(m, 1, n, 1) must solve g(m,n) - g(n,m) = (m - n) / (2 sqrt(mn)).
    auto g = [](double u, double v) { return std::sqrt(v) * overlap_coefficients(rows(u, v, 1.0, 1.0)).c1; };
    const double lhs = g(m, n) - g(n, m);
    const double rhs = (m - n) / (2.0 * std::sqrt(m * n));
    functional.record(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }

  ConstraintReport report;
  report.sample_count = sample_count;
  report.seed = seed;
  for (const Check* c : {&unit_first, &unit_second, &crossed, &rowwise, &uniform, &row_swap,
                         &column_swap, &complementarity, &functional}) {
    report.checks.push_back(c->result());
  }
  return report;
}

}  // namespace qlr
