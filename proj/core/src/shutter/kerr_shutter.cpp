#include "kerrsim/shutter/kerr_shutter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "kerrsim/error.hpp"
#include "kerrsim/optics/pulse.hpp"

namespace kerrsim::shutter {

PhaseEvaluation evaluate_nonlinear_phase(const ShutterConfig& config, double tau_s) {
  config.validate();
  const double length = config.fiber.length_m;
  const double area = config.fiber.effective_area_m2;
  const double dw = config.walkoff_s_per_m();
  const optics::Pulse& pump = config.pump;

  PhaseEvaluation out;
  if (pump.energy_j == 0.0) return out;

  // Base panels span at most a quarter pump FWHM of pump travel each.
  numeric::QuadratureOptions opts = config.quadrature;
  const double sweep = std::abs(dw) * length;
  const double needed = std::ceil(sweep / (0.25 * pump.fwhm_s));
  opts.base_panels = std::max(opts.base_panels, static_cast<int>(std::min(needed, 1e6)));

  const double peak = optics::peak_intensity(pump, area);

  // Far outside the overlap window only an absolute accuracy makes sense;
  // it is pinned to the largest value the integral can take.
  const double pulse_length = optics::unit_profile_area(pump.shape, pump.fwhm_s);
  const double largest = peak * (dw == 0.0 ? length : std::min(length, pulse_length / std::abs(dw)));
  opts.abs_tol = std::max(opts.abs_tol, 1e-3 * opts.rel_tol * largest);
  const auto intensity = [&](double z) {
    return peak * optics::unit_profile(pump.shape, pump.fwhm_s, tau_s + dw * (z - 0.5 * length));
  };
  out.quadrature = numeric::adaptive_simpson(intensity, 0.0, length, opts);
  if (!out.quadrature.converged) {
    char tau[32];
    std::snprintf(tau, sizeof tau, "%.6g", tau_s / 1e-12);
    throw ConvergenceError(std::string("nonlinear_phase did not converge at tau = ") + tau +
                           " ps: " + numeric::describe(out.quadrature));
  }
  const double prefactor = 2.0 * std::numbers::pi * config.effective_n2() / config.signal_wavelength_m;
  out.phase_rad = prefactor * out.quadrature.value;
  out.phase_error_rad = prefactor * out.quadrature.error_estimate;
  return out;
}

double switching_efficiency(double theta_rad, double phase_rad) {
  const double a = std::sin(2.0 * theta_rad);
  const double b = std::sin(0.5 * phase_rad);
  return a * a * b * b;
}

optics::JonesMatrix kerr_jones_matrix(double phase_rad, double pump_angle_rad) {
  return optics::JonesMatrix::retarder(phase_rad, pump_angle_rad);
}

double jones_switching_probability(double theta_rad, double phase_rad, double pump_angle_rad) {
  const double signal_angle = pump_angle_rad - theta_rad;
  const auto signal = optics::JonesVector::linear(signal_angle);
  const auto analyzer = optics::JonesVector::linear(signal_angle + 0.5 * std::numbers::pi);
  return optics::projection_probability(analyzer, kerr_jones_matrix(phase_rad, pump_angle_rad) * signal);
}

ShutterConfig calibrated(const ShutterConfig& config, double target_phase_rad, double reference_energy_j,
                         double tau_s) {
  if (!(reference_energy_j > 0.0)) throw DomainError("calibration reference energy must be positive");
  if (!(target_phase_rad > 0.0)) throw DomainError("calibration target phase must be positive");
  ShutterConfig probe = config;
  probe.calibration.reset();
  probe.pump.energy_j = reference_energy_j;
  const double raw = nonlinear_phase(probe, tau_s);
  if (!(raw > 0.0)) throw DomainError("calibration: pump does not overlap the signal at the reference delay");
  ShutterConfig out = config;
  out.calibration = target_phase_rad / raw;
  return out;
}

}  // namespace kerrsim::shutter
