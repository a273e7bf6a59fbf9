#include <random>

#include <benchmark/benchmark.h>

#include "qcat/catalysis.hpp"
#include "qcat/instances.hpp"
#include "qcat/random.hpp"
#include "qcat/teleportation.hpp"

namespace {

void BM_ClassifyCloning(benchmark::State& state) {
  const auto spec = qcat::instances::cloning_spec();
  for (auto _ : state) benchmark::DoNotOptimize(qcat::classify(spec));
}
BENCHMARK(BM_ClassifyCloning)->Unit(benchmark::kMillisecond);

void BM_CompletePsd(benchmark::State& state) {
  const auto free = static_cast<std::size_t>(state.range(0));
  qcat::EnvironmentGram eg(4);
  // Pin all but `free` of the six off-diagonal entries to 0.3.
  std::size_t pinned = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (pinned++ < 6 - free) eg.set(i, j, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(qcat::complete_psd(eg));
}
BENCHMARK(BM_CompletePsd)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Teleport(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto input = qcat::random_state({2}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qcat::teleport(input));
}
BENCHMARK(BM_Teleport);

void BM_NonlocalCnot(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto input = qcat::random_state({2, 2}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qcat::nonlocal_cnot(input));
}
BENCHMARK(BM_NonlocalCnot);

void BM_DeletionSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcat::deletion_family_sweep(16));
}
BENCHMARK(BM_DeletionSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
