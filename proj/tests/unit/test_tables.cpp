#include <gtest/gtest.h>

#include "qlr/error.hpp"
#include "qlr/random.hpp"
#include "qlr/tables.hpp"
#include "test_helpers.hpp"

namespace qlr {
namespace {

using test::counts;
using test::matrix;
using test::vector;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::ParseError;
}

TEST(ContingencyTable, StreetTableIsValid) {
  const auto t = ContingencyTable::make(matrix({{0.8, 0.7}, {0.6, 0.5}}), vector({0.5, 0.5}));
  EXPECT_EQ(t.features(), 2u);
  EXPECT_EQ(t.hypotheses(), 2u);
  EXPECT_DOUBLE_EQ(t(1, 0), 0.6);
  EXPECT_EQ(t.feature_labels(), (Labels{"D1", "D2"}));
  EXPECT_EQ(t.hypothesis_labels(), (Labels{"H1", "H2"}));
}

TEST(ContingencyTable, PriorsMustSumToOne) {
  EXPECT_EQ(kind_of([] {
              ContingencyTable::make(matrix({{0.8, 0.7}, {0.6, 0.5}}), vector({0.6, 0.5}));
            }),
            ErrorKind::InvalidPriors);
  EXPECT_EQ(kind_of([] {
              ContingencyTable::make(matrix({{0.8, 0.7}}), vector({1.5, -0.5}));
            }),
            ErrorKind::InvalidPriors);
}

TEST(ContingencyTable, ZeroAndOversizedCellsRejected) {
  EXPECT_EQ(kind_of([] { ContingencyTable::make(matrix({{0.8, 0.0}, {0.6, 0.5}})); }),
            ErrorKind::InvalidCell);
  EXPECT_EQ(kind_of([] { ContingencyTable::make(matrix({{1.2, 0.5}})); }), ErrorKind::InvalidCell);
  EXPECT_EQ(kind_of([] { ContingencyTable::make(matrix({{-0.1, 0.5}})); }), ErrorKind::InvalidCell);
}

TEST(ContingencyTable, ShapeChecks) {
  EXPECT_EQ(kind_of([] { ContingencyTable::make(matrix({{0.5}})); }), ErrorKind::BadShape);
  EXPECT_EQ(kind_of([] { ContingencyTable::make(matrix({{0.5, 0.5}}), vector({1.0})); }),
            ErrorKind::BadShape);
  EXPECT_EQ(kind_of([] { ContingencyTable::make(matrix({{0.5, 0.5}}), std::nullopt, {"a", "b"}); }),
            ErrorKind::BadShape);
}

TEST(ContingencyTable, UniformPriorsByDefault) {
  const auto t = ContingencyTable::make(matrix({{0.2, 0.3, 0.5}}));
  for (Eigen::Index a = 0; a < 3; ++a) EXPECT_DOUBLE_EQ(t.priors()(a), 1.0 / 3.0);
  EXPECT_NEAR(t.block_weights().sum(), 3.0, 1e-15);
}

TEST(CountTable, CountsCannotExceedPopulation) {
  EXPECT_EQ(kind_of([] { counts({{11, 7}}, {10, 10}); }), ErrorKind::InvalidCell);
  EXPECT_EQ(kind_of([] { counts({{1, 7}}, {0, 10}); }), ErrorKind::InvalidCell);
  EXPECT_EQ(kind_of([] { counts({{1, 7}}, {kMaxPopulation + 1, 10}); }), ErrorKind::InvalidCell);
}

TEST(FromCounts, StreetCounts) {
  const auto t = from_counts(test::street_counts());
  EXPECT_DOUBLE_EQ(t(0, 0), 0.8);
  EXPECT_DOUBLE_EQ(t(0, 1), 0.7);
  EXPECT_DOUBLE_EQ(t(1, 0), 0.6);
  EXPECT_DOUBLE_EQ(t(1, 1), 0.5);
  EXPECT_DOUBLE_EQ(t.priors()(0), 0.5);
  EXPECT_DOUBLE_EQ(t.priors()(1), 0.5);
}

TEST(FromCounts, SaturatedFeature) {
  const auto t = from_counts(counts({{10, 10}}, {10, 10}));
  EXPECT_EQ(t(0, 0), 1.0);
  EXPECT_EQ(t(0, 1), 1.0);
}

TEST(FromCounts, PopulationShares) {
  const auto t = from_counts(counts({{24, 7}}, {30, 10}));
  EXPECT_DOUBLE_EQ(t.priors()(0), 0.75);
  EXPECT_DOUBLE_EQ(t.priors()(1), 0.25);
}

TEST(FromCounts, ZeroCountPropagatesAsInvalidCell) {
  EXPECT_EQ(kind_of([] { from_counts(counts({{0, 7}}, {10, 10})); }), ErrorKind::InvalidCell);
}

TEST(FromCounts, RatiosRecoverCounts) {
  SuiteRng rng(7);
  for (int s = 0; s < 500; ++s) {
    const auto pa = rng.integer(1, kMaxPopulation);
    const auto pb = rng.integer(1, kMaxPopulation);
    CountMatrix c(2, 2);
    c << rng.integer(1, pa), rng.integer(1, pb), rng.integer(1, pa), rng.integer(1, pb);
    const auto table = CountTable::make(c, {pa, pb});
    const auto x = from_counts(table);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t a = 0; a < 2; ++a) {
        const double back = std::round(x(i, a) * static_cast<double>(table.population(a)));
        ASSERT_EQ(static_cast<std::int64_t>(back), table.count(i, a));
      }
    }
  }
}

TEST(IntersectionRange, StreetRanges) {
  const auto c = test::street_counts();
  EXPECT_EQ(intersection_range(c, 0, 0, 1), (IntegerRange{4, 6}));
  EXPECT_EQ(intersection_range(c, 1, 0, 1), (IntegerRange{2, 5}));
}

TEST(IntersectionRange, LowerBranchStartsAtZero) {
  EXPECT_EQ(intersection_range(counts({{3, 1}, {4, 1}}, {10, 10}), 0, 0, 1), (IntegerRange{0, 3}));
}

TEST(IntersectionRange, BadIndex) {
  const auto c = test::street_counts();
  EXPECT_EQ(kind_of([&] { intersection_range(c, 0, 0, 0); }), ErrorKind::BadIndex);
  EXPECT_EQ(kind_of([&] { intersection_range(c, 2, 0, 1); }), ErrorKind::BadIndex);
  EXPECT_EQ(kind_of([&] { intersection_range(c, 0, 0, 2); }), ErrorKind::BadIndex);
}

TEST(IntersectionRange, BoundsAndSymmetryOverRandomTables) {
  SuiteRng rng(11);
  for (int s = 0; s < 5000; ++s) {
    const auto pop = rng.integer(1, 200);
    CountMatrix c(3, 2);
    for (Eigen::Index i = 0; i < 3; ++i) {
      c(i, 0) = rng.integer(0, pop);
      c(i, 1) = rng.integer(0, pop);
    }
    const auto table = CountTable::make(c, {pop, pop});
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          if (i == j) continue;
          const auto r = intersection_range(table, a, i, j);
          ASSERT_LE(r.lo, r.hi);
          ASSERT_GE(r.lo, 0);
          ASSERT_LE(r.hi, std::min(table.count(i, a), table.count(j, a)));
          ASSERT_EQ(r, intersection_range(table, a, j, i));
        }
      }
    }
  }
}

}  // namespace
}  // namespace qlr
