#include <benchmark/benchmark.h>

#include "kerrsim/stats/monte_carlo.hpp"

using namespace kerrsim::stats;

namespace {

void BM_SimulatePulses(benchmark::State& state) {
  SourceModel m;
  m.mean_pairs = 0.0038;
  m.signal_transmission = 0.1;
  m.noise_mean = 1.3e-4;
  m.noise_statistics = NoiseStatistics::thermal;
  const auto pulses = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_pulses(m, pulses, seed++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulatePulses)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_SimulateBusyPulses(benchmark::State& state) {
  SourceModel m;
  m.mean_pairs = 0.5;
  m.noise_mean = 0.2;
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_pulses(m, 1 << 20, seed++));
  state.SetItemsProcessed(state.iterations() * (1 << 20));
}
BENCHMARK(BM_SimulateBusyPulses)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
