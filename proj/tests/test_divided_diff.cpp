#include <gtest/gtest.h>

#include "lucaspoly/divided_diff.hpp"
#include "lucaspoly/errors.hpp"
#include "lucaspoly/lucas.hpp"

using namespace lucaspoly;

namespace {
BiPoly P(const char* text) { return parse_bipoly(text); }
}  // namespace

TEST(DividedDifference, Examples) {
  EXPECT_EQ(divided_difference(BiPoly::s()), BiPoly(1));
  EXPECT_EQ(divided_difference(lucas(3)), P("s + t - 1"));
  EXPECT_TRUE(divided_difference(P("s^2 t + s t^2 + 7")).is_zero());
  EXPECT_EQ(swap_vars(P("s^2 + 3t")), P("t^2 + 3s"));
}

TEST(SN, SmallValues) {
  EXPECT_TRUE(s_n(0).is_zero());
  EXPECT_TRUE(s_n(1).is_zero());
  EXPECT_EQ(s_n(2), BiPoly(1));
  EXPECT_EQ(s_n(3), P("s + t - 1"));
}

TEST(SN, RoutesAgreeAndSymmetric) {
  const BiPoly s_minus_t = P("s - t");
  for (std::size_t n = 0; n <= 40; ++n) {
    const BiPoly& v = s_n(n);
    EXPECT_EQ(v, s_n_by_mixed_recurrence(n));
    EXPECT_EQ(v, s_n_by_four_term_recurrence(n));
    EXPECT_EQ(v.swap_vars(), v);
    EXPECT_EQ(s_minus_t * v, lucas(n) - lucas(n).swap_vars());
  }
}

TEST(SN, UnswappedMixedRecurrenceFailsFromThree) {
  EXPECT_TRUE(mixed_recurrence_unswapped_holds(2));
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_FALSE(mixed_recurrence_unswapped_holds(n)) << n;
}

TEST(SecondOrderFibonacci, Identity) {
  EXPECT_EQ(eval(s_n(2), 1, 1), 1);
  EXPECT_EQ(eval(s_n(3), 1, 1), 1);
  EXPECT_TRUE(second_order_fib_check(10));
  EXPECT_TRUE(second_order_fib_check(40));
  EXPECT_THROW(second_order_fib_check(1), InputError);
}

TEST(Series, Limits) {
  EXPECT_EQ(series_limit(2, 1), Rational(1, 4));
  EXPECT_EQ(series_limit(1, 1), Rational(1));
  EXPECT_EQ(series_limit(3, 2), Rational(1, 24));
  EXPECT_THROW(series_partial_sum(0, 1, 5), InputError);
}

TEST(Series, ConvergesAtThreeTwo) {
  const Rational dev = abs(series_limit(3, 2) - series_partial_sum(3, 2, 40));
  EXPECT_LT(dev, Rational(1, 1000000));
  // Frozen from exact summation with an independent implementation.
  EXPECT_NEAR(dev.get_d(), 1.53e-7, 0.01e-7);
  const auto devs = series_deviations(3, 2, 60);
  for (std::size_t n = 2; n < devs.size(); ++n) EXPECT_LT(devs[n], devs[n - 1]) << n;
}

TEST(Series, SlowAtOneOneAndTwoOne) {
  // Convergence is real but slower than 1e-6 by N = 60 at these points.
  const auto d11 = series_deviations(1, 1, 60);
  const auto d21 = series_deviations(2, 1, 60);
  EXPECT_EQ(d11[0], d11[1]);
  for (std::size_t n = 2; n <= 60; ++n) {
    EXPECT_LT(d11[n], d11[n - 1]);
    EXPECT_LT(d21[n], d21[n - 1]);
  }
  EXPECT_GT(d11.back(), Rational(1, 1000000));
  EXPECT_GT(d21.back(), Rational(1, 1000000));
}

TEST(ModifiedLucas, Examples) {
  EXPECT_EQ(modified_lucas(0, 3), BiPoly(3));
  EXPECT_EQ(modified_lucas(1, 3), BiPoly(3));
  EXPECT_EQ(modified_lucas(3, 1), P("s^2 + s t + t"));
  EXPECT_TRUE(modified_s(0, 2).is_zero());
  EXPECT_TRUE(modified_s(1, 2).is_zero());
  EXPECT_EQ(modified_s(4, 1), P("s^2 + 2st - s + t^2 - t"));
  EXPECT_EQ(modified_lucas_check(4, 1).quotient, P("s + t"));
  EXPECT_THROW(modified_lucas(3, -1), InputError);
}

TEST(ModifiedLucas, TheoremHolds) {
  for (long alpha : {0, 1, 2, 5}) {
    for (std::size_t n = 0; n <= 30; ++n) {
      const auto c = modified_lucas_check(n, alpha);
      EXPECT_TRUE(c.lucas_homogeneous);
      EXPECT_TRUE(c.s_homogeneous);
      EXPECT_TRUE(c.quotient.has_nonnegative_coefficients());
      EXPECT_TRUE(c.shift_identity) << n;
    }
  }
}
