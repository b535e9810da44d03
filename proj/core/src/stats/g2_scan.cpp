#include "kerrsim/stats/g2_scan.hpp"

#include <limits>

#include "kerrsim/error.hpp"
#include "kerrsim/shutter/response.hpp"
#include "kerrsim/stats/expectation.hpp"
#include "kerrsim/stats/rng.hpp"

namespace kerrsim::stats {

G2Scan g2_vs_energy_curve(const G2ScanSettings& settings, const shutter::ShutterConfig& shutter) {
  settings.input_model.validate();
  settings.noise.validate();
  if (settings.pulses == 0) throw DomainError("g2 scan needs at least one pulse per point");
  if (settings.energies_j.empty()) throw DomainError("g2 scan needs a non-empty energy grid");

  const shutter::EnergyScan eta = shutter::energy_scan(shutter, settings.energies_j, settings.delay_s, settings.threads);

  SourceModel input = settings.input_model;
  input.noise_mean = 0.0;
  input.switch_efficiency = 1.0;
  input.port = AnalyzerPort::switched;

  G2Scan scan;
  scan.g2_input = expected_heralded_g2(input);
  scan.g2_noise = noise_g2(settings.input_model);

  for (std::size_t i = 0; i < settings.energies_j.size(); ++i) {
    G2ScanPoint p;
    p.energy_j = settings.energies_j[i];
    p.switch_efficiency = eta.efficiency[i];
    p.noise_mean = settings.noise.mean_at(p.energy_j);
    p.model = input;
    p.model.switch_efficiency = p.switch_efficiency;
    p.model.noise_mean = p.noise_mean;
    p.seed = derive_seed(settings.seed, i);
    p.signal_rate = heralded_signal_photons(p.model);

    p.counts = simulate_pulses(p.model, settings.pulses, p.seed, settings.threads);
    try {
      p.measured = heralded_g2(p.counts);
    } catch (const InsufficientStatistics&) {
      p.measured.reset();
    }
    if (p.signal_rate + p.noise_mean > 0.0) {
      p.g2_model = expected_g2_mixture(p.signal_rate, p.noise_mean, scan.g2_input, scan.g2_noise);
    } else {
      p.g2_model = std::numeric_limits<double>::quiet_NaN();
    }
    scan.points.push_back(std::move(p));
  }
  return scan;
}

}  // namespace kerrsim::stats
