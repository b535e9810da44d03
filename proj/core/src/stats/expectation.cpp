#include "kerrsim/stats/expectation.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "kerrsim/error.hpp"

namespace kerrsim::stats {

namespace {

// E[x^n] of the pair-number distribution and its derivative in x.
double pair_pgf(const SourceModel& m, double x) {
  if (m.pair_statistics == PairStatistics::thermal) return 1.0 / (1.0 + m.mean_pairs * (1.0 - x));
  return std::exp(m.mean_pairs * (x - 1.0));
}

double pair_pgf_derivative(const SourceModel& m, double x) {
  if (m.pair_statistics == PairStatistics::thermal) {
    const double d = 1.0 + m.mean_pairs * (1.0 - x);
    return m.mean_pairs / (d * d);
  }
  return m.mean_pairs * std::exp(m.mean_pairs * (x - 1.0));
}

double noise_pgf(const SourceModel& m, double s) {
  if (m.noise_statistics == NoiseStatistics::thermal) {
    const double per_mode = m.noise_mean / m.noise_modes;
    return std::pow(1.0 + per_mode * (1.0 - s), -m.noise_modes);
  }
  return std::exp(m.noise_mean * (s - 1.0));
}

// E[x^n P(idler click | n)] = G(x) - (1 - d) G(x (1 - eta_i)).
//
// Written without the O(1) - O(1) subtraction: the result is of order mu and
// three-fold probabilities are second differences of it, so a plain
// difference would leave ~1e-16 absolute noise on numbers of order 1e-9.
double heralded_pgf(const SourceModel& m, double x) {
  const double d = m.dark_count_prob;
  const double mu = m.mean_pairs;
  const double eta = m.idler_efficiency;
  if (m.pair_statistics == PairStatistics::thermal) {
    const double a = 1.0 + mu * (1.0 - x);
    const double b = 1.0 + mu * (1.0 - x * (1.0 - eta));
    return (mu * x * eta + d * a) / (a * b);
  }
  const double shift = -mu * x * eta;  // exponent difference of the two terms
  return std::exp(mu * (x - 1.0)) * (-std::expm1(shift) + d * std::exp(shift));
}

}  // namespace

DetectionProbabilities detection_probabilities(const SourceModel& model) {
  model.validate();
  const double p = model.port_arrival_probability();
  const double nd = 1.0 - model.dark_count_prob;

  // Every photon at the port independently misses a given detector with
  // probability 1/2, and misses both with probability 0.
  const double quiet1 = pair_pgf(model, 1.0 - 0.5 * p) * noise_pgf(model, 0.5) * nd;
  const double herald_quiet1 = heralded_pgf(model, 1.0 - 0.5 * p) * noise_pgf(model, 0.5) * nd;
  const double herald_quiet12 = heralded_pgf(model, 1.0 - p) * noise_pgf(model, 0.0) * nd * nd;

  DetectionProbabilities out;
  out.idler = heralded_pgf(model, 1.0);
  out.signal1 = 1.0 - quiet1;
  out.signal2 = out.signal1;
  out.two_fold_1i = out.idler - herald_quiet1;
  out.two_fold_2i = out.two_fold_1i;
  out.three_fold_12i = out.idler - 2.0 * herald_quiet1 + herald_quiet12;
  return out;
}

double expected_heralded_g2(const SourceModel& model) {
  const DetectionProbabilities d = detection_probabilities(model);
  if (!(d.two_fold_1i > 0.0)) throw DomainError("expected_heralded_g2: no heralded signal clicks in this model");
  return d.three_fold_12i * d.idler / (d.two_fold_1i * d.two_fold_2i);
}

double heralded_signal_photons(const SourceModel& model) {
  const double idler = heralded_pgf(model, 1.0);
  if (!(idler > 0.0)) return 0.0;
  const double n_heralded = pair_pgf_derivative(model, 1.0) - (1.0 - model.dark_count_prob) *
                                                                   (1.0 - model.idler_efficiency) *
                                                                   pair_pgf_derivative(model, 1.0 - model.idler_efficiency);
  return model.port_arrival_probability() * n_heralded / idler;
}

double noise_g2(const SourceModel& model) {
  return model.noise_statistics == NoiseStatistics::thermal ? 1.0 + 1.0 / model.noise_modes : 1.0;
}

double calibrate_mean_pairs(SourceModel model, double target_g2) {
  if (!(target_g2 > 0.0)) throw DomainError("calibrate_mean_pairs: target g2 must be positive");
  model.noise_mean = 0.0;
  const auto residual = [&](double mu) {
    model.mean_pairs = mu;
    return expected_heralded_g2(model) - target_g2;
  };
  // Dark counts push g2 back towards one as mu -> 0, so the curve has a
  // minimum; the physical branch is the rising one above it.
  const auto [log_min, g2_min] = boost::math::tools::brent_find_minima(
      [&](double log_mu) { return residual(std::exp(log_mu)); }, std::log(1e-12), std::log(10.0), 40);
  (void)g2_min;
  double lo = std::exp(log_min);
  double hi = 10.0;
  const double f_lo = residual(lo);
  const double f_hi = residual(hi);
  if (f_lo > 0.0 || f_hi < 0.0) {
    throw DomainError("calibrate_mean_pairs: target g2 not reachable for mean pairs in (0, 10]");
  }
  std::uintmax_t iterations = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(residual, lo, hi, f_lo, f_hi,
                                                        boost::math::tools::eps_tolerance<double>(50), iterations);
  return 0.5 * (a + b);
}

}  // namespace kerrsim::stats
