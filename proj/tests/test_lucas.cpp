#include <gtest/gtest.h>

#include <numeric>

#include "lucaspoly/errors.hpp"
#include "lucaspoly/integer.hpp"
#include "lucaspoly/lucas.hpp"

using namespace lucaspoly;

namespace {
BiPoly P(const char* text) { return parse_bipoly(text); }

Integer fib(std::size_t n) {
  Integer a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return a;
}
}  // namespace

TEST(Lucas, SmallIndicesMatchKnownValues) {
  const char* lucas_rows[] = {"0", "1", "s", "s^2 + t", "s^3 + 2*s*t", "s^4 + 3*s^2*t + t^2", "s^5 + 4*s^3*t + 3*s*t^2"};
  const char* circ_rows[] = {"2",
                             "s",
                             "s^2 + 2*t",
                             "s^3 + 3*s*t",
                             "s^4 + 4*s^2*t + 2*t^2",
                             "s^5 + 5*s^3*t + 5*s*t^2",
                             "s^6 + 6*s^4*t + 9*s^2*t^2 + 2*t^3"};
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(serialize(lucas(n)), lucas_rows[n]);
    EXPECT_EQ(serialize(circular(n)), circ_rows[n]);
  }
}

TEST(Lucas, RecurrenceAndShape) {
  for (std::size_t n = 1; n <= 50; ++n) {
    EXPECT_EQ(lucas(n).deg_s(), static_cast<long>(n) - 1);
    EXPECT_TRUE(lucas(n).is_monic_in_s());
    if (n >= 2) {
      EXPECT_EQ(lucas(n), BiPoly::s() * lucas(n - 1) + BiPoly::t() * lucas(n - 2));
      EXPECT_EQ(circular(n), BiPoly::s() * circular(n - 1) + BiPoly::t() * circular(n - 2));
    }
  }
}

TEST(Lucas, Specializations) {
  for (std::size_t n = 0; n <= 40; ++n) {
    EXPECT_EQ(eval(lucas(n), 1, 1), fib(n));
    EXPECT_EQ(eval(lucas(n), 2, -1), Integer(static_cast<long>(n)));
  }
  for (std::size_t n = 0; n <= 15; ++n) {
    EXPECT_EQ(eval(lucas(2 * n), 0, 7), 0);
    EXPECT_EQ(eval(lucas(2 * n + 1), 0, 7), ipow(7, static_cast<unsigned>(n)));
  }
  EXPECT_EQ(eval(lucas(5), 3, 0), 81);
  EXPECT_EQ(eval(lucas(6), 3, -2), 63);
}

TEST(Lucas, AdditionIdentity) {
  EXPECT_TRUE(check_addition_identity(3, 3));
  EXPECT_TRUE(check_addition_identity(7, 11));
  for (std::size_t m = 0; m <= 15; ++m) {
    for (std::size_t n = 0; n <= 15; ++n) EXPECT_TRUE(check_addition_identity(m, n)) << m << "," << n;
  }
}

TEST(Lucas, GcdOfIndices) {
  for (std::size_t m = 2; m <= 20; ++m) {
    for (std::size_t n = 2; n <= 20; ++n) {
      EXPECT_EQ(gcd(lucas(m), lucas(n)), lucas(std::gcd(m, n))) << m << "," << n;
    }
  }
}

TEST(Lucanomial, Examples) {
  EXPECT_EQ(lucanomial(4, 2).value, P("s^4 + 3s^2t + 2t^2"));
  EXPECT_EQ(lucanomial(6, 3).value, P("s^9 + 8s^7t + 22s^5t^2 + 23s^3t^3 + 6st^4"));
  EXPECT_EQ(eval(lucanomial(6, 3).value, 1, 1), 60);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(lucanomial(n, 0).value, BiPoly(1));
  EXPECT_THROW(lucanomial(3, 4), InputError);
}

TEST(Lucanomial, RoutesAgreeAndFlatSharpFactor) {
  for (std::size_t n = 0; n <= 24; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const BiPoly v = lucanomial(n, k).value;
      ASSERT_TRUE(v.has_nonnegative_coefficients());
      ASSERT_EQ(v, lucanomial_by_recurrence(n, k));
      ASSERT_EQ(flat_lucanomial(n, k) * sharp_lucanomial(n, k), v) << n << "," << k;
    }
  }
}

TEST(FlatSharp, Examples) {
  EXPECT_EQ(flat(6), P("s^3 + s*t"));
  EXPECT_EQ(sharp(6), P("s^2 + 3t"));
  EXPECT_EQ(flat(1), BiPoly(1));
  for (std::size_t p : {2, 3, 5, 7, 11, 13}) EXPECT_EQ(sharp(p), BiPoly(1));
  EXPECT_EQ(sharp(9), P("s^6 + 6s^4t + 9s^2t^2 + t^3"));
  EXPECT_EQ(sharp(12), P("s^8 + 9s^6t + 27s^4t^2 + 29s^2t^3 + 6t^4"));
  EXPECT_EQ(sharp(12).deg_s(), 8);
  EXPECT_EQ(sharp(12).deg_t(), 4);
  EXPECT_THROW(flat(0), InputError);
}

TEST(FlatSharp, DegreeFormulas) {
  for (std::size_t n = 1; n <= 60; ++n) {
    const auto f = factor(Integer(static_cast<long>(n)));
    long sum_p = 0, sum_half = 0;
    for (const auto& pp : f.factors) {
      const long p = pp.prime.get_si();
      sum_p += p;
      sum_half += (p - 1) / 2;
    }
    const long r = static_cast<long>(f.factors.size());
    EXPECT_EQ(sharp(n).deg_s(), static_cast<long>(n) - sum_p + r - 1) << n;
    EXPECT_EQ(sharp(n).deg_t(), (static_cast<long>(n) - 1) / 2 - sum_half) << n;
  }
}

TEST(FlatSharp, DivisibilityAlongDivisors) {
  for (std::size_t n = 1; n <= 40; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      if (n % m) continue;
      EXPECT_TRUE(exact_div(flat(n), flat(m)).has_value()) << m << "|" << n;
      EXPECT_TRUE(exact_div(sharp(n), sharp(m)).has_value()) << m << "|" << n;
    }
  }
}

TEST(Divisibility, ConverseAndIdentity) {
  EXPECT_FALSE(exact_div(lucas(7), lucas(3)).has_value());
  EXPECT_TRUE(non_divisibility_converse(3, 7));
  EXPECT_TRUE(non_divisibility_converse(4, 12));
  EXPECT_TRUE(exact_div(lucas(12), lucas(4)).has_value());
  EXPECT_THROW(non_divisibility_converse(1, 7), InputError);
  EXPECT_TRUE(division_identity_check(3, 2));
  EXPECT_TRUE(division_identity_check(2, 4));
  EXPECT_TRUE(division_identity_check(5, 1));
}

TEST(MultiplicityFree, ResiduesAreNonzeroAndMatchCorrectedForm) {
  const auto r8 = multiplicity_free_check(2, 8);
  EXPECT_EQ(r8.residue, P("4*s*t^3"));
  const auto r6 = multiplicity_free_check(3, 6);
  EXPECT_EQ(r6.residue, P("2*s^3*t + 2*s*t^2"));
  const auto r9 = multiplicity_free_check(3, 9);
  EXPECT_EQ(r9.residue, P("-3*s^2*t^3 - 3*t^4"));
  EXPECT_FALSE(r9.matches_stated());
  EXPECT_EQ(r9.stated_form, P("3*s^2*t^2"));
  for (std::size_t n = 2; n <= 36; ++n) {
    for (std::size_t p = 2; p <= n; ++p) {
      if (n % p) continue;
      const auto r = multiplicity_free_check(p, n);
      EXPECT_FALSE(r.residue.is_zero());
      EXPECT_TRUE(r.matches_corrected()) << p << "," << n;
    }
  }
  EXPECT_THROW(multiplicity_free_check(4, 6), InputError);
}

TEST(PowerOfTwo, Factorizations) {
  for (std::size_t n : {2, 4, 8, 12, 24, 40}) {
    const auto f = power_of_two_factorization(n);
    EXPECT_TRUE(f.lucas_identity) << n;
    EXPECT_TRUE(f.sharp_identity) << n;
  }
  const auto f8 = power_of_two_factorization(8);
  EXPECT_EQ(f8.r, 3U);
  ASSERT_EQ(f8.factors.size(), 4U);
  EXPECT_EQ(f8.factors[1], circular(4));
  EXPECT_EQ(lucas(8), circular(4) * circular(2) * circular(1));
}

TEST(Catalanomial, Examples) {
  EXPECT_EQ(catalanomial(1), BiPoly(1));
  EXPECT_EQ(catalanomial(2), P("s^2 + 2t"));
  EXPECT_EQ(catalanomial(3), P("s^6 + 6s^4t + 10s^2t^2 + 3t^3"));
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_TRUE(catalan_two_term_identity(n)) << n;
    EXPECT_TRUE(catalanomial(n, Flavor::flat).has_nonnegative_coefficients());
    EXPECT_TRUE(catalanomial(n, Flavor::sharp).has_nonnegative_coefficients());
  }
}

TEST(Charpoly, DeterminantIsLucasWithNegatedT) {
  EXPECT_EQ(tridiagonal_charpoly(1, true), BiPoly::s());
  EXPECT_EQ(tridiagonal_charpoly(2, true), P("s^2 - t"));
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(tridiagonal_charpoly(n, false), lucas(n + 1));
    EXPECT_EQ(tridiagonal_charpoly(n, true), negate_t(lucas(n + 1)));
  }
  EXPECT_THROW(tridiagonal_charpoly(0, true), InputError);
}
