#include <benchmark/benchmark.h>

#include "turan/lifting.hpp"
#include "turan/oracle.hpp"

using namespace turan;

namespace {

Hypergraph triangle() {
  Hypergraph g(2, 3);
  g.add_edge({0, 1});
  g.add_edge({1, 2});
  g.add_edge({0, 2});
  return g;
}

LiftedFamilySpec p3_spec() {
  Hypergraph path(2, 4);
  path.add_edge({0, 1});
  path.add_edge({1, 2});
  path.add_edge({2, 3});
  LiftedFamilySpec spec;
  spec.k = 3;
  spec.l = 2;
  spec.base = {path};
  return spec;
}

void BM_ExactExExhaustive(benchmark::State& state) {
  const std::vector<Hypergraph> family = {triangle()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_ex(6, 2, family));
  }
}
BENCHMARK(BM_ExactExExhaustive)->Unit(benchmark::kMillisecond);

void BM_ExactExBranchBound(benchmark::State& state) {
  const std::vector<Hypergraph> family = {triangle()};
  ExOptions opts;
  opts.exhaustive_limit = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_ex(7, 2, family, opts));
  }
}
BENCHMARK(BM_ExactExBranchBound)->Unit(benchmark::kMillisecond);

void BM_ExactExLifted(benchmark::State& state) {
  const LiftedFamilySpec spec = p3_spec();
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_ex_lifted(6, spec));
  }
}
BENCHMARK(BM_ExactExLifted)->Unit(benchmark::kMillisecond);

void BM_FreenessCheck(benchmark::State& state) {
  const LiftedFamilySpec spec = p3_spec();
  const Hypergraph sf = build_sunflower(3, 1, 15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lifted_freeness_check(sf, spec));
  }
}
BENCHMARK(BM_FreenessCheck);

}  // namespace

BENCHMARK_MAIN();
