#include <benchmark/benchmark.h>

#include "turan/poly.hpp"

using namespace turan;

namespace {

// The two coefficient-table shapes that dominate instance construction:
// (2,1,2) gives 4 variables at degree 11, (3,1,2) gives 6 at degree 15.

void BM_SamplePoly(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_poly(5, 4, 11, seed++));
  }
}
BENCHMARK(BM_SamplePoly);

void BM_EvalRaw(benchmark::State& state) {
  const MultiPoly f = sample_poly(5, 4, 11, 1);
  std::uint32_t x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.eval_raw({x & 3, (x >> 1) & 3, (x >> 2) & 3, (x >> 3) & 3}));
    ++x;
  }
}
BENCHMARK(BM_EvalRaw);

void BM_GridValues(benchmark::State& state) {
  const MultiPoly f = sample_poly(5, 4, 11, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_values(f));  // 625 points
  }
}
BENCHMARK(BM_GridValues)->Unit(benchmark::kMicrosecond);

void BM_GridValuesWide(benchmark::State& state) {
  const MultiPoly f = sample_poly(3, 6, 15, 1);  // 54264 coefficients
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_values(f));  // 729 points
  }
}
BENCHMARK(BM_GridValuesWide)->Unit(benchmark::kMillisecond);

void BM_MonomialUnrank(benchmark::State& state) {
  std::uint64_t r = 0;
  const std::uint64_t count = monomial_count(6, 15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(monomial_unrank(r, 6));
    if (++r == count) r = 0;
  }
}
BENCHMARK(BM_MonomialUnrank);

}  // namespace

BENCHMARK_MAIN();
