#include <benchmark/benchmark.h>

#include <random>

#include "nil/betti.hpp"
#include "nil/enumerate.hpp"
#include "nil/harness.hpp"
#include "nil/linalg.hpp"

using namespace nil;

static void BM_HochsterCycle(benchmark::State& state) {
  const MonomialIdeal ideal = closed_neighborhood_ideal(cycle_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table_hochster(ideal, 2));
}
BENCHMARK(BM_HochsterCycle)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

static void BM_HochsterNoPruning(benchmark::State& state) {
  const MonomialIdeal ideal = closed_neighborhood_ideal(cycle_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(betti_table_hochster(ideal, HochsterOptions{2, 1, false}));
  }
}
BENCHMARK(BM_HochsterNoPruning)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

// Taylor is 2^g in the generator count; with g = n it still wins on small cycles.
static void BM_TaylorCycle(benchmark::State& state) {
  const MonomialIdeal ideal = closed_neighborhood_ideal(cycle_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table_taylor_oracle(ideal, 2));
}
BENCHMARK(BM_TaylorCycle)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_RankModP(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = static_cast<std::uint32_t>(state.range(1));
  std::mt19937_64 rng(1);
  std::vector<Entry> entries;
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t c = 0; c < n; ++c) {
      if (rng() % 4 == 0) entries.push_back({r, c, (rng() % 2) ? 1 : -1});
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(n, n, entries, p));
}
BENCHMARK(BM_RankModP)->Args({128, 2})->Args({128, 32003})->Args({512, 2})->Args({512, 32003});

static void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % 2) g.add_edge(u, v);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12)->Arg(16);

static void BM_TreeClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unlabeled_trees(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TreeClasses)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
