#include <benchmark/benchmark.h>

#include "systole/modular_oracle.hpp"

using namespace systole;

static void BM_MinHyperbolicTrace(benchmark::State& state) {
  const long level = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(min_hyperbolic_trace(level));
}
BENCHMARK(BM_MinHyperbolicTrace)->Arg(7)->Arg(50)->Arg(1000)->Arg(5000);

static void BM_GrowthTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(growth_table(2, 200));
}
BENCHMARK(BM_GrowthTable)->Unit(benchmark::kMillisecond);
