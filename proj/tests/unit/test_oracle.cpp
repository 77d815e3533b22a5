#include <gtest/gtest.h>

#include "qlr/classical.hpp"
#include "qlr/error.hpp"
#include "qlr/oracle.hpp"
#include "test_helpers.hpp"

namespace qlr {
namespace {

using test::counts;
using Ks = std::vector<std::int64_t>;

TEST(EnumerateJointCounts, StreetRanges) {
  const auto c = test::street_counts();
  EXPECT_EQ(enumerate_joint_counts(c, 0, 0, 1), (Ks{4, 5, 6}));
  EXPECT_EQ(enumerate_joint_counts(c, 1, 0, 1), (Ks{2, 3, 4, 5}));
}

TEST(EnumerateJointCounts, SaturatedFeatures) {
  EXPECT_EQ(enumerate_joint_counts(counts({{10, 1}, {10, 1}}, {10, 10}), 0, 0, 1), (Ks{10}));
}

TEST(EnumerateJointCounts, BadIndex) {
  try {
    enumerate_joint_counts(test::street_counts(), 0, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadIndex);
  }
}

TEST(Enumerate, StreetEndpoints) {
  const auto result = enumerate(test::street_counts());
  ASSERT_EQ(result.per_hypothesis.size(), 2u);
  EXPECT_EQ(result.per_hypothesis[0].endpoint_probabilities, std::make_pair(0.4, 0.6));
  EXPECT_EQ(result.per_hypothesis[1].endpoint_probabilities, std::make_pair(0.2, 0.5));
  EXPECT_DOUBLE_EQ(result.per_hypothesis[0].enumeration_mean, 0.5);
  EXPECT_DOUBLE_EQ(result.per_hypothesis[1].enumeration_mean, 0.35);
}

TEST(OracleMeans, StreetCounts) {
  const auto o = oracle_mean_estimators(test::street_counts());
  EXPECT_NEAR(o.mean_frequency[0], 0.588, 5e-4);
  ASSERT_TRUE(o.mean_range);
  EXPECT_NEAR((*o.mean_range)[0], 0.597, 5e-4);
  ASSERT_TRUE(o.enumeration_mean);
  // Average of k1 / (k1 + k2) over {4,5,6} x {2,3,4,5}: 65969 / 110880.
  EXPECT_NEAR((*o.enumeration_mean)[0], 65969.0 / 110880.0, 1e-15);
  EXPECT_EQ(o.degenerate_pairs, 0u);
}

TEST(OracleMeans, SymmetricTable) {
  const auto o = oracle_mean_estimators(counts({{6, 6}, {3, 3}}, {10, 10}));
  EXPECT_NEAR(o.mean_frequency[0], 0.5, 1e-15);
  EXPECT_NEAR((*o.mean_range)[0], 0.5, 1e-15);
  EXPECT_NEAR((*o.enumeration_mean)[0], 0.5, 1e-15);
}

TEST(OracleMeans, DegeneratePairsAreCounted) {
  const auto o = oracle_mean_estimators(counts({{3, 0}, {4, 5}}, {10, 10}));
  EXPECT_EQ(o.degenerate_pairs, 1u);
  EXPECT_TRUE(o.mean_range.has_value());
}

TEST(OracleMeans, MoreHypothesesOnlyMeanFrequency) {
  const auto o = oracle_mean_estimators(counts({{8, 7, 2}, {6, 5, 3}}, {10, 10, 10}));
  EXPECT_FALSE(o.mean_range);
  EXPECT_FALSE(o.enumeration_mean);
  EXPECT_EQ(o.mean_frequency.probabilities(),
            mean_frequency_posterior(counts({{8, 7, 2}, {6, 5, 3}}, {10, 10, 10})).probabilities());
}

TEST(OracleMeans, RequiresTwoFeatures) {
  EXPECT_THROW(oracle_mean_estimators(counts({{8, 7}}, {10, 10})), Error);
}

// Exhaustive over populations up to 6 here; the acceptance suite goes further.
TEST(OracleMeans, AgreesWithClosedFormsOnSmallTables) {
  for (std::int64_t pa = 1; pa <= 6; ++pa) {
    for (std::int64_t pb = 1; pb <= 6; ++pb) {
      for (std::int64_t a1 = 0; a1 <= pa; ++a1) {
        for (std::int64_t a2 = 0; a2 <= pa; ++a2) {
          for (std::int64_t b1 = 0; b1 <= pb; ++b1) {
            for (std::int64_t b2 = 0; b2 <= pb; ++b2) {
              CountMatrix m(2, 2);
              m << a1, b1, a2, b2;
              const auto c = CountTable::make(m, {pa, pb});
              for (std::size_t h = 0; h < 2; ++h) {
                const auto r = intersection_range(c, h, 0, 1);
                const auto ks = enumerate_joint_counts(c, h, 0, 1);
                ASSERT_EQ(ks.front(), r.lo);
                ASSERT_EQ(ks.back(), r.hi);
                ASSERT_EQ(static_cast<std::int64_t>(ks.size()), r.size());
              }
              if (std::max(a1 + a2 - pa, std::int64_t{0}) == 0 &&
                  std::max(b1 + b2 - pb, std::int64_t{0}) == 0 &&
                  std::min(a1, a2) == 0 && std::min(b1, b2) == 0) {
                EXPECT_THROW(oracle_mean_estimators(c), Error);
                EXPECT_THROW(mean_frequency_posterior(c), Error);
                continue;
              }
              const auto o = oracle_mean_estimators(c);
              ASSERT_EQ(o.mean_frequency.probabilities(),
                        mean_frequency_posterior(c).probabilities());
              try {
                const auto closed = mean_range_posterior(c);
                ASSERT_EQ((*o.mean_range)[0], closed[0]);
              } catch (const Error& e) {
                ASSERT_EQ(e.kind(), ErrorKind::DegenerateRange);
                ASSERT_GT(o.degenerate_pairs, 0u);
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace qlr
