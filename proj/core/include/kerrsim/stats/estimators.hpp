#pragma once

#include <cstdint>
#include <string>

#include "kerrsim/stats/monte_carlo.hpp"

namespace kerrsim::stats {

// All uncertainties below are first-order propagation of sqrt(N) Poisson
// errors on the raw counts, treated as independent.

struct G2Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Heralded g2 = (N_12i N_i) / (N_1i N_2i), equal to P_12i / (P_1i P_2i)
/// with P = N / N_pulses. With zero three-folds the value is 0 and the error
/// is evaluated as if one three-fold had been seen.
/// Throws InsufficientStatistics if either two-fold tally is zero.
G2Estimate heralded_g2(const CountsSummary& counts);

/// Expected g2 of an incoherent mixture of heralded signal and noise photons:
/// (Ns^2 g_in + 2 Ns Nn + Nn^2 g_noise) / (Ns + Nn)^2.
/// Throws DomainError when both rates are zero or either is negative.
double expected_g2_mixture(double signal_rate, double noise_rate, double g2_input, double g2_noise);

struct EfficiencyEstimate {
  double value = 0.0;
  double std_error = 0.0;
  double n_port = 0.0;   // N_switch or N_anti-switch
  double n_noise = 0.0;
  double n_input = 0.0;
};

/// (N_switch - N_noise) / N_input. Throws DomainError unless N_input > 0.
EfficiencyEstimate switching_efficiency_estimate(double n_switch, double n_noise, double n_input);

/// 1 - (N_anti - N_noise) / N_input. Throws DomainError unless N_input > 0.
EfficiencyEstimate anti_switching_efficiency_estimate(double n_anti, double n_noise, double n_input);

struct SnrEstimate {
  double value = 0.0;
  double std_error = 0.0;
  // Set when no noise counts were recorded: `value` is then a lower bound
  // N_switch / 2.996, using the 95% Poisson upper limit (-ln 0.05) on zero
  // observed noise counts.
  bool lower_bound = false;
};

/// N_switch / N_noise.
SnrEstimate snr(double n_switch, double n_noise);

/// Flat `key=value` record of a run: pulse count, all tallies, derived g2
/// (when the two-folds allow it), seed and model hash.
std::string counts_record(const CountsSummary& counts, std::uint64_t seed, const std::string& model_hash);

}  // namespace kerrsim::stats
