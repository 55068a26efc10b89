#include <benchmark/benchmark.h>

#include "qcharrel/builders.hpp"

using namespace qcr;

static void BM_BuildBasicSeries(benchmark::State& state) {
  const auto& ctx = context(LieType::B, static_cast<int>(state.range(0)));
  const int depth = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_q1(ctx, 1, depth));
  }
}
BENCHMARK(BM_BuildBasicSeries)->Args({2, 4})->Args({2, 6})->Args({3, 4});

static void BM_SeriesProduct(benchmark::State& state) {
  const auto& ctx = context(LieType::B, 2);
  const int depth = static_cast<int>(state.range(0));
  GradedSeries a = build_q1(ctx, 1, depth);
  GradedSeries b = build_q1(ctx, 2, depth, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_SeriesProduct)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
