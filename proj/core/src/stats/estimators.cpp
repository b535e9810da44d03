#include "kerrsim/stats/estimators.hpp"

#include <cmath>
#include <cstdio>

#include "kerrsim/error.hpp"

namespace kerrsim::stats {

namespace {

// 95% upper limit of a Poisson mean after observing zero events.
constexpr double kZeroCountUpperLimit = 2.995732273553991;

EfficiencyEstimate port_fraction(double n_port, double n_noise, double n_input) {
  if (!(n_input > 0.0)) throw DomainError("efficiency estimate needs N_input > 0");
  if (n_port < 0.0 || n_noise < 0.0) throw DomainError("counts must be non-negative");
  EfficiencyEstimate e;
  e.n_port = n_port;
  e.n_noise = n_noise;
  e.n_input = n_input;
  const double f = (n_port - n_noise) / n_input;
  e.value = f;
  e.std_error = std::sqrt((n_port + n_noise) / (n_input * n_input) + f * f / n_input);
  return e;
}

}  // namespace

G2Estimate heralded_g2(const CountsSummary& c) {
  if (c.two_fold_1i == 0 || c.two_fold_2i == 0) {
    throw InsufficientStatistics("heralded_g2: a two-fold coincidence tally is zero");
  }
  const double n12i = static_cast<double>(c.three_fold_12i);
  const double ni = static_cast<double>(c.idler_clicks);
  const double n1i = static_cast<double>(c.two_fold_1i);
  const double n2i = static_cast<double>(c.two_fold_2i);

  G2Estimate g;
  g.value = n12i * ni / (n1i * n2i);
  const double n12i_for_error = n12i > 0.0 ? n12i : 1.0;
  const double scale = n12i_for_error * ni / (n1i * n2i);
  g.std_error = scale * std::sqrt(1.0 / n12i_for_error + 1.0 / ni + 1.0 / n1i + 1.0 / n2i);
  return g;
}

double expected_g2_mixture(double signal_rate, double noise_rate, double g2_input, double g2_noise) {
  if (signal_rate < 0.0 || noise_rate < 0.0) throw DomainError("expected_g2_mixture: rates must be non-negative");
  const double total = signal_rate + noise_rate;
  if (!(total > 0.0)) throw DomainError("expected_g2_mixture: signal and noise rates are both zero");
  if (noise_rate == 0.0) return g2_input;
  if (signal_rate == 0.0) return g2_noise;
  return (signal_rate * signal_rate * g2_input + 2.0 * signal_rate * noise_rate + noise_rate * noise_rate * g2_noise) /
         (total * total);
}

EfficiencyEstimate switching_efficiency_estimate(double n_switch, double n_noise, double n_input) {
  return port_fraction(n_switch, n_noise, n_input);
}

EfficiencyEstimate anti_switching_efficiency_estimate(double n_anti, double n_noise, double n_input) {
  EfficiencyEstimate e = port_fraction(n_anti, n_noise, n_input);
  e.value = 1.0 - e.value;
  return e;
}

SnrEstimate snr(double n_switch, double n_noise) {
  if (n_switch < 0.0 || n_noise < 0.0) throw DomainError("snr: counts must be non-negative");
  SnrEstimate s;
  if (n_noise == 0.0) {
    s.value = n_switch / kZeroCountUpperLimit;
    s.lower_bound = true;
    return s;
  }
  s.value = n_switch / n_noise;
  s.std_error = n_switch > 0.0 ? s.value * std::sqrt(1.0 / n_switch + 1.0 / n_noise) : 0.0;
  return s;
}

std::string counts_record(const CountsSummary& c, std::uint64_t seed, const std::string& model_hash) {
  char buf[640];
  int len = std::snprintf(buf, sizeof buf,
                          "pulses=%llu\nidler_clicks=%llu\nsignal1_clicks=%llu\nsignal2_clicks=%llu\n"
                          "two_fold_1i=%llu\ntwo_fold_2i=%llu\nthree_fold_12i=%llu\n",
                          static_cast<unsigned long long>(c.pulses), static_cast<unsigned long long>(c.idler_clicks),
                          static_cast<unsigned long long>(c.signal1_clicks),
                          static_cast<unsigned long long>(c.signal2_clicks),
                          static_cast<unsigned long long>(c.two_fold_1i), static_cast<unsigned long long>(c.two_fold_2i),
                          static_cast<unsigned long long>(c.three_fold_12i));
  std::string out(buf, static_cast<std::size_t>(len));
  try {
    const G2Estimate g = heralded_g2(c);
    std::snprintf(buf, sizeof buf, "g2=%.10g\ng2_err=%.10g\n", g.value, g.std_error);
    out += buf;
  } catch (const InsufficientStatistics&) {
    out += "g2=nan\ng2_err=nan\n";
  }
  std::snprintf(buf, sizeof buf, "seed=%llu\nmodel_hash=%s\n", static_cast<unsigned long long>(seed),
                model_hash.c_str());
  out += buf;
  return out;
}

}  // namespace kerrsim::stats
