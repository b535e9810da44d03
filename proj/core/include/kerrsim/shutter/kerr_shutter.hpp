#pragma once

#include "kerrsim/numeric/quadrature.hpp"
#include "kerrsim/optics/jones.hpp"
#include "kerrsim/shutter/shutter_config.hpp"

namespace kerrsim::shutter {

struct PhaseEvaluation {
  double phase_rad = 0.0;
  double phase_error_rad = 0.0;  // quadrature error estimate scaled to radians
  numeric::QuadratureResult quadrature;  // raw integral of I_p over z
};

/// Cross-phase shift picked up by a signal photon (at its own reduced time 0)
/// while the pump, offset by `tau_s`, walks through it:
///
///   dphi(tau) = 2 pi n2_eff / lambda_s * int_0^L I_p(tau + d_w (z - L/2)) dz
///
/// Throws ConvergenceError (with quadrature diagnostics) when the requested
/// tolerance is not reached within the depth limit.
PhaseEvaluation evaluate_nonlinear_phase(const ShutterConfig& config, double tau_s);

inline double nonlinear_phase(const ShutterConfig& config, double tau_s) {
  return evaluate_nonlinear_phase(config, tau_s).phase_rad;
}

/// Fraction of signal photons rotated into the crossed analyzer port,
/// sin^2(2 theta) sin^2(dphi / 2).
double switching_efficiency(double theta_rad, double phase_rad);

/// Kerr-induced linear retarder: retardance `phase_rad`, fast axis along the pump.
optics::JonesMatrix kerr_jones_matrix(double phase_rad, double pump_angle_rad);

/// Switching probability obtained by propagating a signal at pump_angle - theta
/// through `kerr_jones_matrix` and projecting on the orthogonal analyzer port.
double jones_switching_probability(double theta_rad, double phase_rad, double pump_angle_rad = 0.0);

/// Returns a copy whose calibration scalar makes dphi(tau_s) = target_phase_rad
/// at pump energy `reference_energy_j`. The pump energy of the copy is unchanged.
ShutterConfig calibrated(const ShutterConfig& config, double target_phase_rad, double reference_energy_j,
                         double tau_s = 0.0);

}  // namespace kerrsim::shutter
