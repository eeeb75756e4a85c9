#include <benchmark/benchmark.h>

#include "hgkit/canonical.hpp"
#include "hgkit/extremal.hpp"
#include "hgkit/generators.hpp"
#include "hgkit/kernel.hpp"
#include "hgkit/sunflower.hpp"
#include "hgkit/transversal.hpp"

using namespace hgkit;

static void BM_MaximalFamilies(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MaximalFamilyOptions opts;
  opts.one_per_iso_class = state.range(1) != 0;
  std::uint64_t families = 0;
  for (auto _ : state) {
    auto stats = enumerate_maximal_intersecting(n, 3, [](const Hypergraph&) {}, opts);
    families = stats.families;
  }
  state.counters["families"] = static_cast<double>(families);
}
BENCHMARK(BM_MaximalFamilies)->Args({6, 0})->Args({7, 0})->Args({7, 1})->Args({8, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_ExtremalSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  SearchOptions opts;
  opts.iso = true;
  for (auto _ : state) benchmark::DoNotOptimize(max_intersecting_with_codegree(n, 3, k, opts));
}
BENCHMARK(BM_ExtremalSearch)->Args({7, 2})->Args({8, 1})->Unit(benchmark::kMillisecond);

static void BM_NaiveSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_intersecting_naive(n, 3, 2));
}
BENCHMARK(BM_NaiveSearch)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Tau(benchmark::State& state) {
  Rng rng(1);
  std::vector<Hypergraph> corpus;
  for (int i = 0; i < 64; ++i) corpus.push_back(random_intersecting(12, 4, rng));
  for (auto _ : state)
    for (const auto& h : corpus) benchmark::DoNotOptimize(tau(h));
}
BENCHMARK(BM_Tau);

static void BM_CrossPair(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_cross_pair(N, 2));
}
BENCHMARK(BM_CrossPair)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
  Rng rng(2);
  std::vector<Hypergraph> corpus;
  for (int i = 0; i < 32; ++i) corpus.push_back(random_hypergraph(9, 3, 20, rng));
  corpus.push_back(build_kernel_system({9, 3, 2}));
  for (auto _ : state)
    for (const auto& h : corpus) benchmark::DoNotOptimize(canonical_form(h));
}
BENCHMARK(BM_CanonicalForm)->Unit(benchmark::kMillisecond);

static void BM_ExactSunflower(benchmark::State& state) {
  Rng rng(3);
  Hypergraph h = random_hypergraph(12, 3, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(find_sunflower_exact(h, 4, 1));
}
BENCHMARK(BM_ExactSunflower)->Arg(40)->Arg(120);

BENCHMARK_MAIN();
