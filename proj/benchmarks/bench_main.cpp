#include <benchmark/benchmark.h>

#include "hypexp/gauss.hpp"
#include "hypexp/kubert.hpp"
#include "hypexp/sheaf.hpp"

using namespace hypexp;

static void BM_TraceH(benchmark::State& state) {
  const auto K = build_field(3, static_cast<unsigned>(state.range(0)));
  const auto P = SheafParams::make(3, 23, 4);
  const auto t = K.from_int(-1);
  for (auto _ : state) benchmark::DoNotOptimize(trace_H(K, P, t));
}
BENCHMARK(BM_TraceH)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_HTraceTable(benchmark::State& state) {
  const auto K = build_field(3, static_cast<unsigned>(state.range(0)));
  const auto P = SheafParams::make(3, 23, 4);
  for (auto _ : state) benchmark::DoNotOptimize(HTraceEngine(K, P).table());
}
BENCHMARK(BM_HTraceTable)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Criterion(benchmark::State& state) {
  const auto r_max = static_cast<unsigned>(state.range(0));
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_criterion(3, 23, 4, r_max, workers));
}
BENCHMARK(BM_Criterion)->Args({9, 1})->Args({11, 1})->Args({11, 4})->Unit(benchmark::kMillisecond);

static void BM_GaussSum(benchmark::State& state) {
  const auto K = build_field(3, static_cast<unsigned>(state.range(0)));
  const u64 e = (K.size() - 1) / 23;
  for (auto _ : state) benchmark::DoNotOptimize(gauss_sum(K, e, false));
}
BENCHMARK(BM_GaussSum)->Arg(5)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_LemmaBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_lemma_bound(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_LemmaBound)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
