#include <benchmark/benchmark.h>

#include "jhall/derived.hpp"
#include "jhall/hall.hpp"
#include "jhall/oracle.hpp"
#include "jhall/symfunc.hpp"

using namespace jhall;

// Memo tables are process-wide, so the library sweeps mostly time warm
// caches. Oracle enumerations are not cached except submodule histograms.

static void BM_HallNumberSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long nonzero = 0;
    for (const auto& l : partitions_of(n))
      for (int k = 0; k <= n; ++k)
        for (const auto& m : partitions_of(n - k))
          for (const auto& v : partitions_of(k)) nonzero += !hall::hall_number(l, m, v).is_zero();
    benchmark::DoNotOptimize(nonzero);
  }
}
BENCHMARK(BM_HallNumberSweep)->DenseRange(3, 7);

static void BM_DerivedProduct(benchmark::State& state) {
  const auto objs = derived::root_objects_up_to(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& a : objs)
      for (const auto& b : objs)
        benchmark::DoNotOptimize(derived::derived_product(derived::natural(a.h0, a.h1), derived::natural(b.h0, b.h1)));
}
BENCHMARK(BM_DerivedProduct)->DenseRange(1, 3);

static void BM_HallLittlewoodP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymRing ring(n);
  for (auto _ : state)
    for (const auto& l : partitions_of(n)) benchmark::DoNotOptimize(ring.hl_P(l));
}
BENCHMARK(BM_HallLittlewoodP)->DenseRange(2, 8, 2);

static void BM_SubmoduleHistogram(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const Partition lambda = state.range(1) == 0 ? Partition{2, 1, 1} : Partition{2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::count_submodules(lambda, {2}, {1, 1}, p));
}
BENCHMARK(BM_SubmoduleHistogram)->Args({2, 0})->Args({3, 0})->Args({3, 1});

static void BM_ClassifyMorphisms(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::classify_morphisms({2, 1}, {2, 1, 1}, p));
}
BENCHMARK(BM_ClassifyMorphisms)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
