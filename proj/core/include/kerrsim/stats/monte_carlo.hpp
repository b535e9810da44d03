#pragma once

#include <cstdint>
#include <string>

#include "kerrsim/stats/source_model.hpp"

namespace kerrsim::stats {

/// Click and coincidence tallies over a run of laser pulses.
struct CountsSummary {
  std::uint64_t pulses = 0;
  std::uint64_t idler_clicks = 0;
  std::uint64_t signal1_clicks = 0;
  std::uint64_t signal2_clicks = 0;
  std::uint64_t two_fold_1i = 0;
  std::uint64_t two_fold_2i = 0;
  std::uint64_t three_fold_12i = 0;

  CountsSummary& operator+=(const CountsSummary& other);
  bool operator==(const CountsSummary&) const = default;

  /// three-fold <= each two-fold <= singles <= pulses.
  bool consistent() const;
};

/// Pulses simulated per independently seeded partition.
inline constexpr std::uint64_t kPartitionPulses = 1ull << 20;

/// Simulates `pulses` pulses from a single engine seeded with `seed`.
CountsSummary simulate_partition(const SourceModel& model, std::uint64_t pulses, std::uint64_t seed);

/// Monte Carlo run of `pulses` pulses.
///
/// The run is cut into partitions of kPartitionPulses; partition i draws from
/// derive_seed(seed, i). Tallies are summed, so the result is identical for
/// every thread count. Throws DomainError for an invalid model or zero pulses.
CountsSummary simulate_pulses(const SourceModel& model, std::uint64_t pulses, std::uint64_t seed,
                              unsigned threads = 1);

}  // namespace kerrsim::stats
