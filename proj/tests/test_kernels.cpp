#include <gtest/gtest.h>

#include <omp.h>

#include "generators.hpp"
#include "lucaspoly/kernels.hpp"
#include "lucaspoly/lucas.hpp"

using namespace lucaspoly;

TEST(Kernels, ParallelMatchesSerialOnRandomInputs) {
  fixtures::Generator gen(17);
  for (int i = 0; i < 500; ++i) {
    const BiPoly a = gen.bipoly(12, 40, 50), b = gen.bipoly(12, 40, 50);
    ASSERT_EQ(kernels::mul_parallel(a, b), kernels::mul_serial(a, b));
  }
}

TEST(Kernels, ParallelMatchesSerialOnLucasProducts) {
  for (std::size_t n = 0; n < 60; n += 7) {
    for (std::size_t m = 1; m < 60; m += 11) {
      ASSERT_EQ(kernels::mul_parallel(lucas(n), circular(m)), kernels::mul_serial(lucas(n), circular(m)));
    }
  }
}

TEST(Kernels, ThreadCountDoesNotChangeResult) {
  const BiPoly a = lucas(80), b = circular(70);
  const BiPoly reference = kernels::mul_serial(a, b);
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    EXPECT_EQ(kernels::mul_parallel(a, b), reference) << threads << " threads";
    EXPECT_EQ(a * b, reference);
  }
  omp_set_num_threads(saved);
}

TEST(Kernels, ZeroOperands) {
  EXPECT_TRUE(kernels::mul_parallel(BiPoly(), lucas(5)).is_zero());
  EXPECT_TRUE(kernels::mul_serial(lucas(5), BiPoly()).is_zero());
}
