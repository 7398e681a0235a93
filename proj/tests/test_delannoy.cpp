#include <gtest/gtest.h>

#include "lucaspoly/delannoy.hpp"
#include "lucaspoly/errors.hpp"
#include "lucaspoly/lucas.hpp"
#include "lucaspoly/tilings.hpp"

using namespace lucaspoly;

TEST(DelannoyNumber, Examples) {
  EXPECT_EQ(delannoy_number(0, 0), 1);
  EXPECT_EQ(delannoy_number(1, 1), 3);
  EXPECT_EQ(delannoy_number(3, 3), 63);
  EXPECT_EQ(delannoy_number(7, 0), 1);
  EXPECT_EQ(delannoy_number(2, 5), delannoy_number(5, 2));
}

TEST(DelannoyNumber, TableAgreesWithPathOracle) {
  for (std::size_t a = 0; a <= 6; ++a) {
    for (std::size_t b = 0; b <= 6; ++b) EXPECT_EQ(delannoy_number(a, b), delannoy_paths_count(a, b)) << a << "," << b;
  }
}

TEST(DelannoyPoly, Examples) {
  EXPECT_TRUE(delannoy_poly(0).is_zero());
  EXPECT_EQ(delannoy_poly(1), UniPoly(1));
  EXPECT_EQ(delannoy_poly(2), parse_unipoly("x + 1"));
  EXPECT_EQ(delannoy_poly(3), parse_unipoly("x^2 + 3x + 1"));
  EXPECT_EQ(delannoy_poly(4), parse_unipoly("x^3 + 5x^2 + 5x + 1"));
  EXPECT_EQ(delannoy_poly(3).eval(1), 5);
}

TEST(DelannoyPoly, CoefficientsAndPalindromes) {
  const UniPoly x = UniPoly::x();
  Integer p0 = 0, p1 = 1;
  for (std::size_t n = 1; n <= 30; ++n) {
    const UniPoly& d = delannoy_poly(n);
    EXPECT_EQ(d, substitute(lucas(n), x + UniPoly(1), x));
    ASSERT_EQ(d.degree(), static_cast<long>(n) - 1);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(d.coeff(i), delannoy_number(n - 1 - i, i));
    EXPECT_TRUE(d.is_palindrome());
    EXPECT_EQ(d.eval(1), p1) << n;
    Integer next = 2 * p1 + p0;
    p0 = p1;
    p1 = next;
  }
}

TEST(Delannomial, Examples) {
  EXPECT_EQ(delannomial(5, 0), UniPoly(1));
  EXPECT_EQ(delannomial(2, 1), parse_unipoly("x + 1"));
  EXPECT_EQ(delannomial(4, 2), parse_unipoly("x^4 + 7x^3 + 14x^2 + 7x + 1"));
  EXPECT_EQ(delannomial(6, 3), UniPoly(std::vector<Integer>{1, 17, 114, 385, 701, 701, 385, 114, 17, 1}));
  EXPECT_THROW(delannomial(2, 3), InputError);
}

TEST(Delannomial, SymmetricUnimodalNonnegative) {
  for (std::size_t n = 0; n <= 16; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const UniPoly d = delannomial(n, k);
      EXPECT_TRUE(d.has_nonnegative_coefficients());
      const auto report = symmetry_unimodality(d);
      EXPECT_TRUE(report.is_symmetric) << n << "," << k;
      EXPECT_TRUE(report.is_unimodal) << n << "," << k;
    }
  }
}

TEST(SymmetryReport, Verdicts) {
  const auto d4 = symmetry_unimodality(delannoy_poly(4));
  EXPECT_TRUE(d4.is_symmetric);
  EXPECT_TRUE(d4.is_unimodal);
  EXPECT_EQ(d4.central_monomial.first, 2U);
  EXPECT_EQ(d4.central_monomial.second, 5);
  const auto one = symmetry_unimodality(UniPoly(1));
  EXPECT_TRUE(one.is_symmetric && one.is_unimodal);
  EXPECT_EQ(one.central_monomial.first, 0U);
  const auto d3 = symmetry_unimodality(delannoy_poly(3));
  EXPECT_EQ(d3.central_monomial, std::make_pair(std::size_t{1}, Integer(3)));
  const auto dip = symmetry_unimodality(parse_unipoly("x^2 + 1"));
  EXPECT_TRUE(dip.is_symmetric);
  EXPECT_FALSE(dip.is_unimodal);
  EXPECT_FALSE(symmetry_unimodality(parse_unipoly("x + 2")).is_symmetric);
  EXPECT_THROW(symmetry_unimodality(UniPoly()), InputError);
}
