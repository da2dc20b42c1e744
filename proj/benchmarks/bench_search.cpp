#include <benchmark/benchmark.h>

#include "systole/salem.hpp"

using namespace systole;

static void BM_EnumerateHeightOne(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_complex_salem(degree, INFINITY, 1L));
}
BENCHMARK(BM_EnumerateHeightOne)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateMahlerBox(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_complex_salem(degree, 2.0));
}
BENCHMARK(BM_EnumerateMahlerBox)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
