#include <benchmark/benchmark.h>

#include "systole/lie_orders.hpp"

using namespace systole;

static void BM_GroupOrder(benchmark::State& state) {
  const LieType type = LieType::make(LieFamily::SplitD, static_cast<int>(state.range(0)));
  const ExactInteger q("1000000007");
  for (auto _ : state) benchmark::DoNotOptimize(group_order(type, q));
}
BENCHMARK(BM_GroupOrder)->Arg(4)->Arg(16)->Arg(64);
