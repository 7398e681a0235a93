#include <gtest/gtest.h>

#include "lucaspoly/errors.hpp"
#include "lucaspoly/sequences.hpp"

using namespace lucaspoly;

namespace {
std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST(Specialize, PellFibonacciAndPowers) {
  const auto pell = specialize_sequence(Family::lucas, 2, 1, 8);
  EXPECT_EQ(pell.values, ints({0, 1, 2, 5, 12, 29, 70, 169, 408}));
  const auto fib = specialize_sequence(Family::lucas, 1, 1, 7);
  EXPECT_EQ(fib.values, ints({0, 1, 1, 2, 3, 5, 8, 13}));
  EXPECT_EQ(specialize_sequence(Family::lucas, 3, 0, 5).at(5), 81);
  EXPECT_EQ(specialize_sequence(Family::lucas, 2, -1, 40).at(37), 37);
  EXPECT_EQ(specialize_sequence(Family::lucas, 2, 1, 36).at(36), Integer("21300003689580"));
}

TEST(Specialize, AllFamiliesMatchEvaluation) {
  for (Family f : {Family::lucas, Family::circular, Family::flat, Family::sharp, Family::delannoy}) {
    for (auto [s, t] : {std::pair{2L, 1L}, {1L, 1L}, {3L, -2L}, {0L, 5L}, {-1L, 2L}}) {
      EXPECT_NO_THROW(specialize_sequence(f, s, t, 40)) << to_string(f);
    }
  }
  EXPECT_EQ(specialize_sequence(Family::flat, 2, 1, 6).first_index, 1U);
  EXPECT_EQ(specialize_sequence(Family::sharp, 2, 1, 6).at(6), 7);  // s^2 + 3t at (2,1)
  EXPECT_EQ(specialize_sequence(Family::delannoy, 1, 0, 3).at(3), 5);
  EXPECT_EQ(parse_family("sharp"), Family::sharp);
  EXPECT_THROW(parse_family("pell"), InputError);
}

TEST(Period, Examples) {
  const auto pell = detect_period(Family::lucas, 2, 1, 3);
  EXPECT_EQ(pell.preperiod, 0U);
  EXPECT_EQ(pell.period, 8U);
  EXPECT_EQ(pell.cycle, ints({0, 1, 2, 2, 0, 2, 1, 1}));
  const auto fib = detect_period(Family::lucas, 1, 1, 2);
  EXPECT_EQ(fib.period, 3U);
  EXPECT_EQ(fib.cycle, ints({0, 1, 1}));
  const auto zero = detect_period(Family::lucas, 5, 10, 5);
  EXPECT_EQ(zero.preperiod, 2U);
  EXPECT_EQ(zero.period, 1U);
  EXPECT_EQ(zero.cycle, ints({0}));
  EXPECT_EQ(detect_period(Family::lucas, 1, 1, 10).period, 60U);
  EXPECT_THROW(detect_period(Family::lucas, 2, 1, 1), InputError);
  EXPECT_THROW(detect_period(Family::sharp, 2, 1, 3), InputError);
}

TEST(Period, ReplayReproducesCycle) {
  for (long m = 2; m <= 30; ++m) {
    for (long s = -3; s <= 3; ++s) {
      const auto r = detect_period(Family::circular, s, 2, m);
      const auto seq = specialize_sequence(Family::circular, s, 2, r.preperiod + 2 * r.period + 1);
      for (std::size_t i = 0; i < 2 * r.period; ++i) {
        Integer residue;
        mpz_fdiv_r(residue.get_mpz_t(), seq.at(r.preperiod + i).get_mpz_t(), Integer(m).get_mpz_t());
        ASSERT_EQ(residue, r.cycle[i % r.period]);
      }
    }
  }
}

TEST(Valuation, ProfileAndZeros) {
  const auto prof = valuation_profile(Family::lucas, 2, 1, 3, 12);
  EXPECT_FALSE(prof.valuations[0].has_value());
  EXPECT_EQ(prof.valuations[4], 1);
  EXPECT_EQ(prof.valuations[8], 1);
  EXPECT_EQ(prof.valuations[12], 2);
  EXPECT_THROW(valuation_profile(Family::lucas, 2, 1, 4, 12), InputError);
}

TEST(Pell, ValuationFormulaAndAddition) {
  const auto c = pell_valuation_check(2000);
  EXPECT_TRUE(c.valuation_formula);
  EXPECT_TRUE(c.addition_identity);
  EXPECT_TRUE(c.ok());
}

TEST(Pell, SquareDoesNotDivideSquareIndex) { EXPECT_TRUE(motivating_corollary_check(6)); }

TEST(Theta, PellLikeSequenceGivesP) {
  for (long p : {2, 3, 5, 7, 11}) {
    const auto r = theta_search(2, -1, p, 200);
    EXPECT_EQ(r.verdict, ThetaVerdict::consistent);
    ASSERT_TRUE(r.theta.has_value());
    EXPECT_EQ(*r.theta, p);
  }
  EXPECT_EQ(*theta_search(2, -1, 5, 100).theta, 5);
}

TEST(Theta, UndefinedAndErrors) {
  const auto r = theta_search(0, 1, 3, 10);
  EXPECT_EQ(r.verdict, ThetaVerdict::undefined);
  EXPECT_EQ(r.first_zero, 2U);
  EXPECT_THROW(theta_search(2, -1, 4, 10), InputError);
  EXPECT_THROW(theta_search(2, -1, 7, 5), InputError);
}

TEST(Theta, SummedValuationMatchesDirectProduct) {
  for (long p : {2, 3, 5}) {
    for (auto [s, t] : {std::pair{2L, 1L}, {2L, -1L}, {3L, 1L}}) {
      const auto r = theta_search(s, t, p, 40);
      for (std::size_t n = 1; n <= 40; ++n) {
        ASSERT_EQ(r.cumulative[n - 1], flat_factorial_valuation_direct(s, t, p, n)) << s << "," << t << " p=" << p;
      }
    }
  }
}
