#pragma once

#include <cstdint>
#include <random>

namespace kerrsim::stats {

using Engine = std::mt19937_64;

/// One SplitMix64 step from state `x`: advance by the golden-ratio increment,
/// then apply the bijective output mix.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for partition `index` of a run seeded with `seed`: output number
/// index + 1 of the SplitMix64 sequence started from state `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(Engine& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace kerrsim::stats
