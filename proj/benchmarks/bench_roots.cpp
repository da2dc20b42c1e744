#include <benchmark/benchmark.h>

#include "systole/roots.hpp"
#include "systole/salem.hpp"

using namespace systole;

static void BM_FindRootsDegree10(benchmark::State& state) {
  const IntPolynomial p{1, 1, 0, 0, 0, -1, 0, 0, 0, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(p, kCircleTolerance));
}
BENCHMARK(BM_FindRootsDegree10);

static void BM_IsComplexSalem(benchmark::State& state) {
  const IntPolynomial p{1, 0, 0, 1, 1, 1, 0, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(is_complex_salem(p));
}
BENCHMARK(BM_IsComplexSalem);

static void BM_CyclotomicDivision(benchmark::State& state) {
  const IntPolynomial p = cyclotomic(12) * cyclotomic(30) * IntPolynomial{1, 1, 1, -1, 1, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(divide_cyclotomic(p));
}
BENCHMARK(BM_CyclotomicDivision);
