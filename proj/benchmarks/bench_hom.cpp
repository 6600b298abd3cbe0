#include <benchmark/benchmark.h>

#include "turan/hypergraph.hpp"
#include "turan/rng.hpp"

using namespace turan;

namespace {

// Deterministic host: every k-subset kept with the given density.
Hypergraph random_host(int k, int n, double density, std::uint64_t seed) {
  Hypergraph g(k, n);
  Rng rng(seed);
  Edge pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  while (true) {
    if (rng.uniform01() < density) g.add_edge(pick);
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return g;
}

Hypergraph cherry() {
  Hypergraph g(2, 3);
  g.add_edge({0, 1});
  g.add_edge({1, 2});
  return g;
}

Hypergraph two_three() {
  Hypergraph g(2, 5);
  for (VertexId r : {0, 1}) {
    for (VertexId w : {2, 3, 4}) g.add_edge({r, w});
  }
  return g;
}

void BM_CountHoms(benchmark::State& state) {
  const Hypergraph host = random_host(2, 12, 0.4, 1);
  const Hypergraph pattern = cherry();
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_homs(pattern, host));
  }
}
BENCHMARK(BM_CountHoms);

void BM_CountInjective(benchmark::State& state) {
  const Hypergraph host = random_host(2, 12, 0.4, 1);
  const Hypergraph pattern = two_three();
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_inj(pattern, host));
  }
}
BENCHMARK(BM_CountInjective);

void BM_ContainsAny(benchmark::State& state) {
  // sparse host, so the search usually has to exhaust before giving up
  const Hypergraph host = random_host(2, 14, 0.12, 3);
  const std::vector<Hypergraph> family = {two_three()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(contains_any(host, family));
  }
}
BENCHMARK(BM_ContainsAny);

void BM_CanonicalForm(benchmark::State& state) {
  const Hypergraph g = random_host(2, 8, 0.5, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalForm);

void BM_CanonicalFormTriples(benchmark::State& state) {
  const Hypergraph g = random_host(3, 7, 0.3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalFormTriples);

}  // namespace

BENCHMARK_MAIN();
