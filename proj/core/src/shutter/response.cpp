#include "kerrsim/shutter/response.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "kerrsim/error.hpp"
#include "kerrsim/parallel.hpp"
#include "kerrsim/shutter/kerr_shutter.hpp"

namespace kerrsim::shutter {

namespace {

void require_increasing(std::span<const double> x, const char* what) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw DomainError(std::string(what) + " must be strictly increasing");
  }
}

struct PointResult {
  double efficiency = 0.0;
  std::size_t evaluations = 0;
  double error = 0.0;  // absolute, in efficiency units
};

PointResult intrinsic_point(const ShutterConfig& config, double tau_s) {
  const PhaseEvaluation p = evaluate_nonlinear_phase(config, tau_s);
  // |d eta / d phi| <= imperfection * sin^2(2 theta) / 2
  const double s2 = std::sin(2.0 * config.theta_rad);
  return {config.imperfection * switching_efficiency(config.theta_rad, p.phase_rad), p.quadrature.evaluations,
          0.5 * config.imperfection * s2 * s2 * p.phase_error_rad};
}

PointResult total_point(const ShutterConfig& config, double tau_s) {
  const SignalProfile& profile = config.signal_profile;
  if (profile.kind == SignalProfileKind::delta) return intrinsic_point(config, tau_s);

  const double half = profile.support_half_width();
  const double finest = std::min(profile.gaussian_fwhm_s, config.pump.fwhm_s);
  numeric::QuadratureOptions opts = config.quadrature;
  opts.base_panels = std::max(opts.base_panels, static_cast<int>(std::ceil(2.0 * half / (0.5 * finest))));
  // Efficiencies are bounded by one.
  opts.abs_tol = std::max(opts.abs_tol, 1e-3 * opts.rel_tol);

  // Inner phase integrals are tightened so their own error does not look like
  // structure to the outer refinement.
  ShutterConfig inner = config;
  inner.quadrature.rel_tol = config.quadrature.rel_tol * 1e-3;

  PointResult out;
  const auto integrand = [&](double t) {
    const double w = profile.weight(t);
    if (w == 0.0) return 0.0;
    const PointResult p = intrinsic_point(inner, tau_s - t);
    out.evaluations += p.evaluations;
    return p.efficiency * w;
  };
  const auto weighted = numeric::adaptive_simpson(integrand, -half, half, opts);
  const auto norm = numeric::adaptive_simpson([&](double t) { return profile.weight(t); }, -half, half, opts);
  if (!weighted.converged || !norm.converged) {
    char tau[32];
    std::snprintf(tau, sizeof tau, "%.6g", tau_s / 1e-12);
    throw ConvergenceError(std::string("total_response did not converge at tau = ") + tau +
                           " ps: " + numeric::describe(weighted));
  }
  out.efficiency = weighted.value / norm.value;
  out.evaluations += norm.evaluations;
  out.error = weighted.error_estimate / norm.value;
  return out;
}

template <class PointFn>
ResponseCurve sample_curve(const ShutterConfig& config, std::span<const double> delays_s, unsigned threads,
                           PointFn&& point) {
  config.validate();
  require_increasing(delays_s, "delays");
  ResponseCurve curve;
  curve.config = config;
  curve.delays_s.assign(delays_s.begin(), delays_s.end());
  std::vector<PointResult> results(delays_s.size());
  parallel_for(delays_s.size(), threads, [&](std::size_t i) { results[i] = point(config, delays_s[i]); });
  curve.efficiency.reserve(results.size());
  for (const auto& r : results) {
    curve.efficiency.push_back(std::clamp(r.efficiency, 0.0, 1.0));
    curve.diagnostics.evaluations += r.evaluations;
    curve.diagnostics.worst_error = std::max(curve.diagnostics.worst_error, r.error);
  }
  return curve;
}

}  // namespace

double intrinsic_efficiency(const ShutterConfig& config, double tau_s) {
  return intrinsic_point(config, tau_s).efficiency;
}

ResponseCurve intrinsic_response(const ShutterConfig& config, std::span<const double> delays_s, unsigned threads) {
  return sample_curve(config, delays_s, threads, intrinsic_point);
}

ResponseCurve total_response(const ShutterConfig& config, std::span<const double> delays_s, unsigned threads) {
  return sample_curve(config, delays_s, threads, total_point);
}

double fwhm(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3) throw ShapeError("fwhm needs at least three matched samples");
  const auto peak_it = std::max_element(y.begin(), y.end());
  const double half = 0.5 * *peak_it;
  if (!(half > 0.0)) throw ShapeError("fwhm: curve has no positive maximum");
  const std::size_t peak = static_cast<std::size_t>(peak_it - y.begin());

  std::size_t l = peak;
  while (l > 0 && y[l] >= half) --l;
  if (y[l] >= half) throw ShapeError("fwhm: curve never falls below half maximum on the left");
  std::size_t r = peak;
  while (r + 1 < y.size() && y[r] >= half) ++r;
  if (y[r] >= half) throw ShapeError("fwhm: curve never falls below half maximum on the right");

  const double xl = x[l] + (half - y[l]) * (x[l + 1] - x[l]) / (y[l + 1] - y[l]);
  const double xr = x[r - 1] + (half - y[r - 1]) * (x[r] - x[r - 1]) / (y[r] - y[r - 1]);
  return xr - xl;
}

double fwhm(const ResponseCurve& curve) { return fwhm(curve.delays_s, curve.efficiency); }

EnergyScan energy_scan(const ShutterConfig& config, std::span<const double> energies_j, double tau_s,
                       unsigned threads) {
  config.validate();
  require_increasing(energies_j, "energies");
  if (!energies_j.empty() && energies_j.front() < 0.0) throw DomainError("energies must be non-negative");

  EnergyScan scan;
  scan.delay_s = tau_s;
  scan.energies_j.assign(energies_j.begin(), energies_j.end());

  ShutterConfig ref = config;
  if (!(ref.pump.energy_j > 0.0)) ref.pump.energy_j = 1e-9;
  scan.kappa_rad_per_j = nonlinear_phase(ref, tau_s) / ref.pump.energy_j;

  scan.phase_rad.resize(energies_j.size());
  scan.efficiency.resize(energies_j.size());
  parallel_for(energies_j.size(), threads, [&](std::size_t i) {
    ShutterConfig c = config;
    c.pump.energy_j = energies_j[i];
    scan.phase_rad[i] = nonlinear_phase(c, tau_s);
    scan.efficiency[i] = config.imperfection * switching_efficiency(config.theta_rad, scan.phase_rad[i]);
  });
  return scan;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (i + 1 == n) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

}  // namespace kerrsim::shutter
