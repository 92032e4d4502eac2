#include "roc/moments.hpp"
#include "roc/transform.hpp"

#include <benchmark/benchmark.h>

namespace {

void cycleToWalkBench(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<roc::Rational> c;
  for (int j = 3; j <= k; ++j) c.emplace_back(j % 3, j);
  for (auto _ : state) benchmark::DoNotOptimize(roc::cycleToWalk(c, k));
}
BENCHMARK(cycleToWalkBench)->DenseRange(6, 16, 2);

void walkPolynomialBench(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(roc::walkPolynomial(k));
}
BENCHMARK(walkPolynomialBench)->DenseRange(6, 16, 2);

void recoverAtomsBench(benchmark::State& state) {
  roc::DiscreteMeasure d{{0.3, 0.5}, {0.2, 1.3}, {0.4, 2.2}, {0.1, 3.7}};
  auto mu = roc::momentsOf(d, 8);
  for (auto _ : state) benchmark::DoNotOptimize(roc::recoverAtoms(mu));
}
BENCHMARK(recoverAtomsBench);

}  // namespace
