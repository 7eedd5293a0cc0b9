#include <gtest/gtest.h>

#include "orient/bounds.hpp"

using namespace orient;

namespace {

const std::vector<std::vector<long long>> kPublished{
    {0, 1, 5, 11, 27, 55},
    {3, 9, 33, 105, 336, 1032},
    {4, 22, 118, 478, 2014, 8062},
    {10, 50, 290, 1490, 7680, 38640},
};

}  // namespace

TEST(Bounds, CountsAndNaive) {
  EXPECT_EQ(nonsymmetric_count(2, 4), 12);
  EXPECT_EQ(nonsymmetric_count(3, 3), 18);
  EXPECT_EQ(nonsymmetric_count(5, 2), 20);
  EXPECT_EQ(naive_bound(2, 5), 12);
  EXPECT_EQ(naive_bound(3, 2), 3);
  EXPECT_EQ(naive_bound(4, 3), 24);
}

TEST(Bounds, PublishedTable) {
  const std::vector<std::uint32_t> qs{2, 3, 4, 5};
  const std::vector<std::uint32_t> ns{2, 3, 4, 5, 6, 7};
  const auto t = bounds_table(qs, ns);
  ASSERT_EQ(t.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_EQ(t[i][j], kPublished[i][j]) << "q=" << qs[i] << " n=" << ns[j];
    }
  }
}

TEST(Bounds, ReportFields) {
  const auto r = period_bound(3, 6);
  EXPECT_TRUE(r.strengthened_bound.has_value());
  EXPECT_EQ(r.table_bound, 336);
  EXPECT_LE(r.table_bound, r.naive_bound);
  EXPECT_FALSE(period_bound(3, 4).strengthened_bound.has_value());
  EXPECT_TRUE(period_bound(3, 4, true).diagnostic_strengthened.has_value());
  EXPECT_FALSE(period_bound(4, 6).strengthened_bound.has_value());
  EXPECT_THROW(period_bound(1, 3), std::invalid_argument);
  EXPECT_THROW(period_bound(3, 1), std::invalid_argument);
}

TEST(Bounds, BoundNeverExceedsNaive) {
  for (std::uint32_t q = 2; q <= 9; ++q) {
    for (std::uint32_t n = 2; n <= 12; ++n) {
      const auto r = period_bound(q, n);
      EXPECT_LE(r.table_bound, r.naive_bound) << q << "," << n;
      EXPECT_GE(r.table_bound, 0);
    }
  }
}

TEST(Bounds, LargeValuesStayExact) {
  const auto r = period_bound(7, 40);
  EXPECT_GT(r.nonsymmetric_count, BigInt(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_FALSE(table_bound_u64(7, 40).has_value());
  EXPECT_EQ(table_bound_u64(5, 7), 38640u);
}
