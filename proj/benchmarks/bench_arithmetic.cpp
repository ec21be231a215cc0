#include <benchmark/benchmark.h>

#include "supercong/sequences.hpp"
#include "supercong/truncated_sums.hpp"

using namespace supercong;

static void BM_FibLucas(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fib_lucas(n));
}
BENCHMARK(BM_FibLucas)->RangeMultiplier(10)->Range(100, 1'000'000);

static void BM_ModularKernelStream(benchmark::State& state) {
  const auto id = static_cast<KernelId>(state.range(0));
  const RingDescriptor ring(101, 6);
  for (auto _ : state) {
    ModularKernelStream stream(id, ring);
    for (int n = 0; n < 1000; ++n) stream.advance();
    benchmark::DoNotOptimize(stream.value());
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_ModularKernelStream)->DenseRange(0, 2)->ArgName("kernel");

static void BM_SumModular(benchmark::State& state) {
  const auto& spec = sum_spec(static_cast<SumId>(state.range(0)));
  const auto length = static_cast<unsigned long>(state.range(1));
  const RingDescriptor ring(97, 6);
  for (auto _ : state) benchmark::DoNotOptimize(sum_mod(spec, length, ring));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_SumModular)->ArgsProduct({{0, 2, 5}, {97, 9409}});

static void BM_SumExact(benchmark::State& state) {
  const auto& spec = sum_spec(SumId::S1);
  const auto length = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sum_exact(spec, length));
}
BENCHMARK(BM_SumExact)->Arg(50)->Arg(200);
