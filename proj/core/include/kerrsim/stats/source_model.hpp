#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kerrsim::stats {

enum class PairStatistics { thermal, poissonian };
enum class NoiseStatistics { poissonian, thermal };
enum class AnalyzerPort { switched, anti_switched };

std::string_view to_string(PairStatistics s);
std::string_view to_string(NoiseStatistics s);
std::string_view to_string(AnalyzerPort p);
PairStatistics parse_pair_statistics(std::string_view text);
NoiseStatistics parse_noise_statistics(std::string_view text);
AnalyzerPort parse_analyzer_port(std::string_view text);

/// Heralded pair source, Kerr switch and HBT detection, one time bin per pulse.
///
/// Each of the n pair photons reaches the switch with `signal_transmission`
/// and is rotated with `switch_efficiency`. The analyzed port receives the
/// photons belonging to it plus a fraction `analyzer_extinction` of the
/// others. Noise photons are added at the port; the total is split 50:50 on
/// two threshold detectors, each also firing on dark counts.
struct SourceModel {
  double mean_pairs = 0.0;
  PairStatistics pair_statistics = PairStatistics::thermal;
  double idler_efficiency = 1.0;
  double signal_transmission = 1.0;
  double switch_efficiency = 1.0;
  AnalyzerPort port = AnalyzerPort::switched;
  double noise_mean = 0.0;
  NoiseStatistics noise_statistics = NoiseStatistics::poissonian;
  int noise_modes = 15;  // thermal noise only; g2 = 1 + 1/modes
  double dark_count_prob = 1e-6;
  double analyzer_extinction = 0.01;

  /// Probability that one pair photon arrives at the analyzed port.
  double port_arrival_probability() const;

  /// Throws DomainError if any probability leaves [0, 1] or a mean is negative.
  void validate() const;

  /// Canonical `key=value` text, one field per line; used for hashing.
  std::string canonical_text() const;

  /// FNV-1a of `canonical_text()`, printed as 16 hex digits.
  std::string hash() const;

  bool operator==(const SourceModel&) const = default;
};

/// Per-pulse noise photon mean as a function of pump energy.
struct NoiseModel {
  enum class Kind { none, power_law, table };

  Kind kind = Kind::power_law;
  double reference_mean = 1.3e-4;   // photons per pulse at reference_energy
  double reference_energy_j = 3.0e-9;
  double exponent = 3.0;
  // Piecewise-linear (energy J, mean) samples for Kind::table; constant beyond the ends.
  std::vector<std::pair<double, double>> table;

  double mean_at(double energy_j) const;
  void validate() const;

  bool operator==(const NoiseModel&) const = default;
};

std::string_view to_string(NoiseModel::Kind kind);
NoiseModel::Kind parse_noise_model_kind(std::string_view text);

}  // namespace kerrsim::stats
