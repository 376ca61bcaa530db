// Serial reference vs OpenMP enumeration kernels, plus the two formula routes.

#include <benchmark/benchmark.h>

#include "trinet/formulas.hpp"
#include "trinet/oracle.hpp"

using namespace trinet;

static void BM_CountSerial(benchmark::State& state) {
  const NetSize n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::count_by_class(n));
}
BENCHMARK(BM_CountSerial)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_CountParallel(benchmark::State& state) {
  const NetSize n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_by_class(n));
  state.counters["threads"] = max_threads();
}
BENCHMARK(BM_CountParallel)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_AngleLawSerial(benchmark::State& state) {
  const NetSize n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::angle_law_check(n));
}
BENCHMARK(BM_AngleLawSerial)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_AngleLawParallel(benchmark::State& state) {
  const NetSize n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(angle_law_check(n));
}
BENCHMARK(BM_AngleLawParallel)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_HexagonClosed(benchmark::State& state) {
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(formulas::hexagon_closed(NetSize(n)));
    n = n % 100000 + 1;
  }
}
BENCHMARK(BM_HexagonClosed);

static void BM_HexagonSequence(benchmark::State& state) {
  const NetSize n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formulas::order2_sequence(formulas::hexagon_recurrence_def(), n));
}
BENCHMARK(BM_HexagonSequence)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
