// Serial vs OpenMP BiPoly multiplication on Lucas-sized operands.
//
//   bench_mul --benchmark_filter=Lucas
//   OMP_NUM_THREADS=8 bench_mul

#include <benchmark/benchmark.h>

#include <omp.h>

#include <random>

#include "lucaspoly/kernels.hpp"
#include "lucaspoly/lucas.hpp"

using namespace lucaspoly;

namespace {

// Dense-ish random operand: every monomial of total degree <= deg with
// probability 1/2.
BiPoly random_operand(std::uint32_t deg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  std::vector<Term> terms;
  for (std::uint32_t i = 0; i <= deg; ++i) {
    for (std::uint32_t j = 0; i + j <= deg; ++j) {
      if (rng() & 1) terms.push_back({{i, j}, Integer(coeff(rng))});
    }
  }
  return BiPoly::from_terms(std::move(terms));
}

template <BiPoly (*Mul)(const BiPoly&, const BiPoly&)>
void BM_Lucas(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BiPoly& a = lucas(n);
  const BiPoly& b = circular(n);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
  state.counters["pairs"] = static_cast<double>(a.size() * b.size());
  state.counters["threads"] = omp_get_max_threads();
}

template <BiPoly (*Mul)(const BiPoly&, const BiPoly&)>
void BM_Random(benchmark::State& state) {
  const auto deg = static_cast<std::uint32_t>(state.range(0));
  const BiPoly a = random_operand(deg, 1), b = random_operand(deg, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
  state.counters["pairs"] = static_cast<double>(a.size() * b.size());
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_Lucas<kernels::mul_serial>)->Name("Lucas/serial")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_Lucas<kernels::mul_parallel>)->Name("Lucas/parallel")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_Random<kernels::mul_serial>)->Name("Random/serial")->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(BM_Random<kernels::mul_parallel>)->Name("Random/parallel")->RangeMultiplier(2)->Range(16, 128);

BENCHMARK_MAIN();
