#include "kerrsim/stats/source_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "kerrsim/error.hpp"

namespace kerrsim::stats {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

void require_probability(double p, const char* name) {
  if (!is_probability(p)) throw DomainError(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

std::string_view to_string(PairStatistics s) { return s == PairStatistics::thermal ? "thermal" : "poissonian"; }
std::string_view to_string(NoiseStatistics s) { return s == NoiseStatistics::thermal ? "thermal" : "poissonian"; }
std::string_view to_string(AnalyzerPort p) { return p == AnalyzerPort::switched ? "switched" : "anti_switched"; }

PairStatistics parse_pair_statistics(std::string_view text) {
  if (text == "thermal" || text == "two_mode_squeezed") return PairStatistics::thermal;
  if (text == "poissonian") return PairStatistics::poissonian;
  throw DomainError("unknown pair statistics '" + std::string(text) + "'");
}

NoiseStatistics parse_noise_statistics(std::string_view text) {
  if (text == "poissonian") return NoiseStatistics::poissonian;
  if (text == "thermal") return NoiseStatistics::thermal;
  throw DomainError("unknown noise statistics '" + std::string(text) + "'");
}

AnalyzerPort parse_analyzer_port(std::string_view text) {
  if (text == "switched") return AnalyzerPort::switched;
  if (text == "anti_switched") return AnalyzerPort::anti_switched;
  throw DomainError("unknown analyzer port '" + std::string(text) + "'");
}

double SourceModel::port_arrival_probability() const {
  const double own = port == AnalyzerPort::switched ? switch_efficiency : 1.0 - switch_efficiency;
  return signal_transmission * (own + analyzer_extinction * (1.0 - own));
}

void SourceModel::validate() const {
  if (!(mean_pairs >= 0.0) || !std::isfinite(mean_pairs)) throw DomainError("mean_pairs must be non-negative");
  if (!(noise_mean >= 0.0) || !std::isfinite(noise_mean)) throw DomainError("noise_mean must be non-negative");
  require_probability(idler_efficiency, "idler_efficiency");
  require_probability(signal_transmission, "signal_transmission");
  require_probability(switch_efficiency, "switch_efficiency");
  require_probability(dark_count_prob, "dark_count_prob");
  require_probability(analyzer_extinction, "analyzer_extinction");
  if (noise_statistics == NoiseStatistics::thermal && noise_modes < 1) {
    throw DomainError("noise_modes must be at least 1");
  }
}

std::string SourceModel::canonical_text() const {
  char buf[768];
  std::snprintf(buf, sizeof buf,
                "mean_pairs=%.17g\npair_statistics=%s\nidler_efficiency=%.17g\nsignal_transmission=%.17g\n"
                "switch_efficiency=%.17g\nport=%s\nnoise_mean=%.17g\nnoise_statistics=%s\nnoise_modes=%d\n"
                "dark_count_prob=%.17g\nanalyzer_extinction=%.17g\n",
                mean_pairs, std::string(to_string(pair_statistics)).c_str(), idler_efficiency, signal_transmission,
                switch_efficiency, std::string(to_string(port)).c_str(), noise_mean,
                std::string(to_string(noise_statistics)).c_str(), noise_modes, dark_count_prob, analyzer_extinction);
  return buf;
}

std::string SourceModel::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical_text()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double NoiseModel::mean_at(double energy_j) const {
  switch (kind) {
    case Kind::none:
      return 0.0;
    case Kind::power_law:
      if (energy_j <= 0.0) return 0.0;
      return reference_mean * std::pow(energy_j / reference_energy_j, exponent);
    case Kind::table: {
      if (table.empty()) return 0.0;
      if (energy_j <= table.front().first) return table.front().second;
      if (energy_j >= table.back().first) return table.back().second;
      const auto hi = std::upper_bound(table.begin(), table.end(), energy_j,
                                       [](double e, const auto& row) { return e < row.first; });
      const auto lo = hi - 1;
      const double f = (energy_j - lo->first) / (hi->first - lo->first);
      return lo->second + f * (hi->second - lo->second);
    }
  }
  return 0.0;
}

void NoiseModel::validate() const {
  if (kind == Kind::power_law) {
    if (!(reference_mean >= 0.0)) throw DomainError("noise reference mean must be non-negative");
    if (!(reference_energy_j > 0.0)) throw DomainError("noise reference energy must be positive");
    if (!std::isfinite(exponent)) throw DomainError("noise exponent must be finite");
  }
  if (kind == Kind::table) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!(table[i].second >= 0.0)) throw DomainError("noise table means must be non-negative");
      if (i > 0 && !(table[i].first > table[i - 1].first)) {
        throw DomainError("noise table energies must be strictly increasing");
      }
    }
  }
}

std::string_view to_string(NoiseModel::Kind kind) {
  switch (kind) {
    case NoiseModel::Kind::none:
      return "none";
    case NoiseModel::Kind::power_law:
      return "power_law";
    case NoiseModel::Kind::table:
      return "table";
  }
  return "unknown";
}

NoiseModel::Kind parse_noise_model_kind(std::string_view text) {
  if (text == "none") return NoiseModel::Kind::none;
  if (text == "power_law") return NoiseModel::Kind::power_law;
  if (text == "table") return NoiseModel::Kind::table;
  throw DomainError("unknown noise model '" + std::string(text) + "'");
}

}  // namespace kerrsim::stats
