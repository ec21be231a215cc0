#include <benchmark/benchmark.h>

#include "supercong/numeric_series.hpp"

using namespace supercong;

static void BM_PiOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pi_oracle(state.range(0)));
}
BENCHMARK(BM_PiOracle)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_EvalSeries(benchmark::State& state) {
  const auto& spec = builtin_series()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(spec.name);
  for (auto _ : state) benchmark::DoNotOptimize(eval_series(spec, state.range(1)));
}
BENCHMARK(BM_EvalSeries)
    ->ArgsProduct({{0, 1, 2, 3, 4, 5}, {50, 500}})
    ->Unit(benchmark::kMillisecond);
