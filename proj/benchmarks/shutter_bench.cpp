#include <benchmark/benchmark.h>

#include <numbers>

#include "kerrsim/shutter/kerr_shutter.hpp"
#include "kerrsim/shutter/response.hpp"

using namespace kerrsim;

namespace {

shutter::ShutterConfig config() {
  static const auto c = shutter::calibrated(shutter::ShutterConfig{}, std::numbers::pi, 3e-9, 0.0);
  return c;
}

void BM_NonlinearPhase(benchmark::State& state) {
  const auto c = config();
  double tau = -1e-12;
  for (auto _ : state) {
    benchmark::DoNotOptimize(shutter::nonlinear_phase(c, tau));
    tau = tau > 1e-12 ? -1e-12 : tau + 1e-14;
  }
}
BENCHMARK(BM_NonlinearPhase);

void BM_TotalResponsePoint(benchmark::State& state) {
  const auto c = config();
  const std::vector<double> tau{0.6e-12};
  for (auto _ : state) benchmark::DoNotOptimize(shutter::total_response(c, tau));
}
BENCHMARK(BM_TotalResponsePoint)->Unit(benchmark::kMillisecond);

void BM_DelayScan(benchmark::State& state) {
  const auto c = config();
  auto d = shutter::linspace(-4e-12, 4e-12, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shutter::total_response(c, d));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DelayScan)->Arg(161)->Unit(benchmark::kMillisecond);

}  // namespace
