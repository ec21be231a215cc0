#include <benchmark/benchmark.h>

#include "supercong/congruences.hpp"

using namespace supercong;

static void BM_SweepAllFamilies(benchmark::State& state) {
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(builtin_families(), 100, 1, jobs));
  }
}
BENCHMARK(BM_SweepAllFamilies)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_SingleCaseSquare(benchmark::State& state) {
  const auto& family = find_family("F1-full");
  for (auto _ : state) benchmark::DoNotOptimize(check_case(family, 97, 2));
}
BENCHMARK(BM_SingleCaseSquare)->Unit(benchmark::kMillisecond);
