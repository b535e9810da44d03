#include "kerrsim/stats/monte_carlo.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <vector>

#include "kerrsim/error.hpp"
#include "kerrsim/parallel.hpp"
#include "kerrsim/stats/rng.hpp"

namespace kerrsim::stats {

namespace {

// Sequential inversion for a count distribution given P(0) and the ratio
// P(k+1)/P(k). Small means keep the loop short.
template <class Ratio>
std::uint32_t invert_counts(double u, double p0, Ratio ratio) {
  double p = p0;
  double cdf = p0;
  std::uint32_t k = 0;
  while (u >= cdf) {
    p *= ratio(k);
    if (p <= 0.0) break;
    cdf += p;
    ++k;
  }
  return k;
}

class PhotonSampler {
 public:
  PhotonSampler() = default;

  static PhotonSampler poisson(double mean) {
    PhotonSampler s;
    s.p0_ = std::exp(-mean);
    s.mean_ = mean;
    s.thermal_ = false;
    return s;
  }

  // Negative binomial with `modes` equally populated thermal modes.
  static PhotonSampler thermal(double mean, int modes) {
    PhotonSampler s;
    s.modes_ = modes;
    s.x_ = (mean / modes) / (1.0 + mean / modes);
    s.p0_ = std::pow(1.0 + mean / modes, -modes);
    s.mean_ = mean;
    s.thermal_ = true;
    return s;
  }

  std::uint32_t operator()(Engine& rng) const {
    if (mean_ == 0.0) return 0;
    const double u = uniform01(rng);
    if (u < p0_) return 0;
    if (thermal_) {
      return invert_counts(u, p0_, [&](std::uint32_t k) { return (k + modes_) * x_ / (k + 1.0); });
    }
    return invert_counts(u, p0_, [&](std::uint32_t k) { return mean_ / (k + 1.0); });
  }

 private:
  double p0_ = 1.0;
  double mean_ = 0.0;
  double x_ = 0.0;
  int modes_ = 1;
  bool thermal_ = false;
};

// Number of photons out of `n` sent to output 1 of a 50:50 splitter.
std::uint32_t split_half(std::uint32_t n, Engine& rng) {
  std::uint32_t out = 0;
  while (n >= 64) {
    out += static_cast<std::uint32_t>(std::popcount(rng()));
    n -= 64;
  }
  if (n > 0) out += static_cast<std::uint32_t>(std::popcount(rng() & ((1ull << n) - 1)));
  return out;
}

}  // namespace

CountsSummary& CountsSummary::operator+=(const CountsSummary& o) {
  pulses += o.pulses;
  idler_clicks += o.idler_clicks;
  signal1_clicks += o.signal1_clicks;
  signal2_clicks += o.signal2_clicks;
  two_fold_1i += o.two_fold_1i;
  two_fold_2i += o.two_fold_2i;
  three_fold_12i += o.three_fold_12i;
  return *this;
}

bool CountsSummary::consistent() const {
  return three_fold_12i <= std::min(two_fold_1i, two_fold_2i) && two_fold_1i <= std::min(idler_clicks, signal1_clicks) &&
         two_fold_2i <= std::min(idler_clicks, signal2_clicks) && idler_clicks <= pulses && signal1_clicks <= pulses &&
         signal2_clicks <= pulses;
}

CountsSummary simulate_partition(const SourceModel& model, std::uint64_t pulses, std::uint64_t seed) {
  Engine rng(seed);

  const PhotonSampler pairs = model.pair_statistics == PairStatistics::thermal
                                  ? PhotonSampler::thermal(model.mean_pairs, 1)
                                  : PhotonSampler::poisson(model.mean_pairs);
  const PhotonSampler noise = model.noise_statistics == NoiseStatistics::thermal
                                  ? PhotonSampler::thermal(model.noise_mean, model.noise_modes)
                                  : PhotonSampler::poisson(model.noise_mean);
  const double arrive = model.port_arrival_probability();
  const double dark = model.dark_count_prob;

  // Idler click probability for n pairs: 1 - (1 - eta_i)^n (1 - dark).
  std::array<double, 64> herald{};
  for (std::size_t n = 0; n < herald.size(); ++n) {
    herald[n] = 1.0 - std::pow(1.0 - model.idler_efficiency, static_cast<double>(n)) * (1.0 - dark);
  }

  CountsSummary c;
  c.pulses = pulses;
  for (std::uint64_t i = 0; i < pulses; ++i) {
    const std::uint32_t n = pairs(rng);
    const double p_herald =
        n < herald.size() ? herald[n]
                          : 1.0 - std::pow(1.0 - model.idler_efficiency, static_cast<double>(n)) * (1.0 - dark);
    const bool idler = uniform01(rng) < p_herald;

    std::uint32_t photons = 0;
    for (std::uint32_t j = 0; j < n; ++j) photons += uniform01(rng) < arrive ? 1u : 0u;
    photons += noise(rng);

    const std::uint32_t to1 = photons > 0 ? split_half(photons, rng) : 0;
    const std::uint32_t to2 = photons - to1;
    const bool s1 = to1 > 0 || uniform01(rng) < dark;
    const bool s2 = to2 > 0 || uniform01(rng) < dark;

    c.idler_clicks += idler;
    c.signal1_clicks += s1;
    c.signal2_clicks += s2;
    c.two_fold_1i += idler && s1;
    c.two_fold_2i += idler && s2;
    c.three_fold_12i += idler && s1 && s2;
  }
  return c;
}

CountsSummary simulate_pulses(const SourceModel& model, std::uint64_t pulses, std::uint64_t seed, unsigned threads) {
  model.validate();
  if (pulses == 0) throw DomainError("simulate_pulses: need at least one pulse");

  const std::uint64_t partitions = (pulses + kPartitionPulses - 1) / kPartitionPulses;
  std::vector<CountsSummary> parts(partitions);
  parallel_for(partitions, threads, [&](std::size_t i) {
    const std::uint64_t begin = i * kPartitionPulses;
    const std::uint64_t n = std::min(kPartitionPulses, pulses - begin);
    parts[i] = simulate_partition(model, n, derive_seed(seed, i));
  });

  CountsSummary total;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace kerrsim::stats
