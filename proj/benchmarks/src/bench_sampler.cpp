#include "roc/sampler.hpp"

#include <benchmark/benchmark.h>

namespace {

void sampleRocBench(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(roc::sampleRoc(n, 25, 30, 0.2, ++seed));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(sampleRocBench)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void sampleDrocBench(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  roc::DegreeTarget t{std::vector<double>(n, 20.0)};
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(roc::sampleDroc(n, t, 40, 0.25, ++seed));
}
BENCHMARK(sampleDrocBench)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void sampleErBench(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(roc::sampleErdosRenyi(10000, 0.0025, ++seed));
}
BENCHMARK(sampleErBench)->Unit(benchmark::kMillisecond);

}  // namespace
