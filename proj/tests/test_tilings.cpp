#include <gtest/gtest.h>

#include "lucaspoly/errors.hpp"
#include "lucaspoly/lucas.hpp"
#include "lucaspoly/tilings.hpp"

using namespace lucaspoly;

TEST(LinearTilings, SmallLengths) {
  EXPECT_EQ(linear_tilings_weight(0), BiPoly(1));
  EXPECT_EQ(linear_tilings_weight(2), parse_bipoly("s^2 + t"));
  EXPECT_EQ(linear_tilings_weight(5), parse_bipoly("s^5 + 4s^3t + 3st^2"));
  const auto all = linear_tilings(4);
  ASSERT_EQ(all.size(), 5U);
  for (const auto& t : all) EXPECT_EQ(t.length(), 4U);
}

TEST(LinearTilings, MatchLucasAndFibonacciCounts) {
  Integer a = 1, b = 1;  // f_1, f_2
  for (std::size_t len = 0; len <= 16; ++len) {
    EXPECT_EQ(linear_tilings_weight(len), lucas(len + 1)) << len;
    EXPECT_EQ(Integer(static_cast<unsigned long>(linear_tilings(len).size())), a);
    Integer c = a + b;
    a = b;
    b = c;
  }
}

TEST(CircularTilings, MatchCircularLucas) {
  EXPECT_EQ(circular_tilings_weight(1), BiPoly::s());
  EXPECT_EQ(circular_tilings_weight(2), parse_bipoly("s^2 + 2t"));
  for (std::size_t n = 1; n <= 16; ++n) EXPECT_EQ(circular_tilings_weight(n), circular(n)) << n;
  EXPECT_THROW(circular_tilings(0), InputError);
  std::size_t wrapping = 0;
  for (const auto& t : circular_tilings(5)) wrapping += t.wraps;
  EXPECT_EQ(wrapping, 3U);
}

TEST(BoxPartitions, CountAndComplement) {
  EXPECT_EQ(box_partitions(2, 2).size(), 6U);
  EXPECT_EQ(box_partitions(3, 4).size(), 35U);
  EXPECT_EQ(box_partitions(0, 3).size(), 1U);
  const BoxPartition lambda{{3, 1, 0}, 4};
  EXPECT_EQ(lambda.complement_columns(), (std::vector<std::size_t>{1, 2, 2, 3}));
}

TEST(LucanomialTilingSum, Examples) {
  EXPECT_EQ(lucanomial_tiling_sum(1, 1), BiPoly::s());
  EXPECT_EQ(lucanomial_tiling_sum(4, 0), BiPoly(1));
  EXPECT_EQ(lucanomial_tiling_sum(0, 4), BiPoly(1));
  EXPECT_EQ(lucanomial_tiling_sum(2, 2), parse_bipoly("s^4 + 3s^2t + 2t^2"));
}

TEST(LucanomialTilingSum, MatchesLucanomialUpToNine) {
  for (std::size_t total = 0; total <= 9; ++total) {
    for (std::size_t n = 0; n <= total; ++n) {
      EXPECT_EQ(lucanomial_tiling_sum(total - n, n), lucanomial(total, n).value) << total - n << "," << n;
    }
  }
}

TEST(Budget, ExceededIsReported) {
  EXPECT_THROW(linear_tilings(30, 1000), BudgetExceeded);
  EXPECT_THROW(delannoy_paths_count(8, 8, 100), BudgetExceeded);
}

TEST(DelannoyPaths, Counts) {
  EXPECT_EQ(delannoy_paths_count(0, 5), 1);
  EXPECT_EQ(delannoy_paths_count(4, 0), 1);
  EXPECT_EQ(delannoy_paths_count(1, 1), 3);
  EXPECT_EQ(delannoy_paths_count(2, 2), 13);
  EXPECT_EQ(delannoy_paths_count(3, 3), 63);
  std::size_t seen = 0;
  for_each_delannoy_path(2, 3, [&](const LatticePath& path) {
    long east = 0, north = 0;
    for (Step s : path.steps) {
      east += s != Step::north;
      north += s != Step::east;
    }
    EXPECT_EQ(east, 3);
    EXPECT_EQ(north, 2);
    ++seen;
  });
  EXPECT_EQ(seen, 25U);
}
