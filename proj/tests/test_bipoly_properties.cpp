#include <gtest/gtest.h>

#include "generators.hpp"
#include "lucaspoly/bipoly.hpp"

using namespace lucaspoly;

namespace {
constexpr int kCases = 2000;
}

TEST(BiPolyProperties, RingAxioms) {
  fixtures::Generator gen(101);
  for (int i = 0; i < kCases; ++i) {
    const BiPoly a = gen.bipoly(), b = gen.bipoly(), c = gen.bipoly();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * BiPoly(1), a);
    ASSERT_TRUE((a * BiPoly()).is_zero());
    ASSERT_TRUE((a + (-a)).is_zero());
  }
}

TEST(BiPolyProperties, DivisionRoundTrip) {
  fixtures::Generator gen(202);
  for (int i = 0; i < kCases; ++i) {
    const BiPoly a = gen.bipoly(), b = gen.nonzero_bipoly();
    const auto q = exact_div(a * b, b);
    ASSERT_TRUE(q.has_value()) << serialize(a) << " | " << serialize(b);
    ASSERT_EQ(*q, a);
  }
}

TEST(BiPolyProperties, ReduceIsInvariantUnderMultiplesOfModulus) {
  fixtures::Generator gen(303);
  for (int i = 0; i < kCases; ++i) {
    const BiPoly m = gen.monic_in_s(static_cast<unsigned>(gen.integer(1, 3)));
    const BiPoly a = gen.bipoly(4), k = gen.bipoly(2);
    const BiPoly r = reduce_mod_monic_s(a, m);
    ASSERT_LT(r.deg_s(), m.deg_s());
    ASSERT_EQ(reduce_mod_monic_s(a + k * m, m), r);
    ASSERT_TRUE(exact_div(a - r, m).has_value());
  }
}

TEST(BiPolyProperties, GcdNormalization) {
  fixtures::Generator gen(404);
  for (int i = 0; i < kCases / 4; ++i) {
    const BiPoly a = gen.nonzero_bipoly(2, 3), b = gen.nonzero_bipoly(2, 3), g = gen.nonzero_bipoly(2, 2, 4);
    const BiPoly expected = normalize_sign(gcd(a, b) * g);
    const BiPoly got = gcd(a * g, b * g);
    ASSERT_EQ(got, expected) << serialize(a) << " ; " << serialize(b) << " ; " << serialize(g);
    ASSERT_TRUE(exact_div(a, gcd(a, b)).has_value());
  }
}

TEST(BiPolyProperties, SerializeParseRoundTrip) {
  fixtures::Generator gen(505);
  for (int i = 0; i < kCases; ++i) {
    const BiPoly a = gen.bipoly(5, 8, 1000);
    ASSERT_EQ(parse_bipoly(serialize(a)), a) << serialize(a);
  }
}

TEST(BiPolyProperties, SwapIsInvolution) {
  fixtures::Generator gen(606);
  for (int i = 0; i < kCases; ++i) {
    const BiPoly a = gen.bipoly(), b = gen.bipoly();
    ASSERT_EQ(a.swap_vars().swap_vars(), a);
    ASSERT_EQ((a * b).swap_vars(), a.swap_vars() * b.swap_vars());
  }
}
