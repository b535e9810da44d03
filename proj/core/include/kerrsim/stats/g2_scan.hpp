#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kerrsim/shutter/shutter_config.hpp"
#include "kerrsim/stats/estimators.hpp"
#include "kerrsim/stats/monte_carlo.hpp"
#include "kerrsim/stats/source_model.hpp"

namespace kerrsim::stats {

struct G2ScanSettings {
  // Source as seen without the pump: mean_pairs already calibrated. Its
  // switch_efficiency and noise_mean are replaced at every grid point.
  SourceModel input_model;
  NoiseModel noise;
  std::vector<double> energies_j;
  double delay_s = 0.0;
  std::uint64_t pulses = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct G2ScanPoint {
  double energy_j = 0.0;
  double switch_efficiency = 0.0;
  double noise_mean = 0.0;
  double signal_rate = 0.0;  // heralded signal photons per herald at the port
  SourceModel model;
  std::uint64_t seed = 0;
  CountsSummary counts;
  std::optional<G2Estimate> measured;  // empty when the two-folds were zero
  double g2_model = 0.0;               // incoherent-mixture prediction
};

struct G2Scan {
  std::vector<G2ScanPoint> points;
  double g2_input = 0.0;  // heralded g2 of the unswitched input photons
  double g2_noise = 1.0;
};

/// g2 of the switched photons against pump energy.
///
/// For each energy the switch efficiency comes from the shutter energy scan
/// at `delay_s` and the noise mean from `noise`; point i is simulated with
/// derive_seed(seed, i). Alongside each Monte Carlo estimate the mixture
/// model is evaluated with the same signal and noise rates.
G2Scan g2_vs_energy_curve(const G2ScanSettings& settings, const shutter::ShutterConfig& shutter);

}  // namespace kerrsim::stats
