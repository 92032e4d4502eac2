#include "roc/counts.hpp"
#include "roc/sampler.hpp"

#include <benchmark/benchmark.h>

namespace {

void walkCountsRoc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  roc::Graph g = roc::sampleRoc(n, 20, 10, 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(roc::walkCounts(g, 8));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(walkCountsRoc)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond)->Complexity();

void cycleCountsRoc(benchmark::State& state) {
  roc::Graph g = roc::sampleRoc(20000, 20, 10, 0.5, 2);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(roc::cycleCounts(g, k));
}
BENCHMARK(cycleCountsRoc)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void averageClusteringRoc(benchmark::State& state) {
  roc::Graph g = roc::sampleRoc(10000, 25, 30, 0.2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(roc::averageClustering(g));
}
BENCHMARK(averageClusteringRoc)->Unit(benchmark::kMillisecond);

}  // namespace
