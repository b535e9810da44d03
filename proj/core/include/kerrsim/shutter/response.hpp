#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kerrsim/shutter/shutter_config.hpp"

namespace kerrsim::shutter {

/// Quadrature bookkeeping accumulated over a scan.
struct ScanDiagnostics {
  std::size_t evaluations = 0;      // integrand evaluations, all levels
  double worst_error = 0;           // largest quadrature error estimate, efficiency units
};

/// Switching efficiency sampled against pump delay.
struct ResponseCurve {
  std::vector<double> delays_s;
  std::vector<double> efficiency;
  ShutterConfig config;
  ScanDiagnostics diagnostics;
};

/// Efficiency of a signal photon with no temporal extent:
/// imperfection * sin^2(2 theta) sin^2(dphi(tau)/2).
double intrinsic_efficiency(const ShutterConfig& config, double tau_s);

/// Pointwise intrinsic efficiency. Delays must be strictly increasing.
ResponseCurve intrinsic_response(const ShutterConfig& config, std::span<const double> delays_s, unsigned threads = 1);

/// Intrinsic response averaged over the signal photon's temporal weight,
/// eta_tot(tau) = int eta(tau - t) w(t) dt. A delta profile returns the
/// intrinsic curve unchanged.
ResponseCurve total_response(const ShutterConfig& config, std::span<const double> delays_s, unsigned threads = 1);

/// Full width at half maximum, interpolating linearly between samples on
/// both flanks of the global maximum. Throws ShapeError if either flank
/// never drops below half maximum.
double fwhm(std::span<const double> x, std::span<const double> y);
double fwhm(const ResponseCurve& curve);

/// Efficiency against pump energy at a fixed delay.
///
/// The phase is linear in pump energy, so the samples follow
/// imperfection * sin^2(2 theta) sin^2(kappa E / 2); kappa is reported in rad/J.
struct EnergyScan {
  std::vector<double> energies_j;
  std::vector<double> phase_rad;
  std::vector<double> efficiency;
  double kappa_rad_per_j = 0.0;
  double delay_s = 0.0;
};

/// Energies must be non-negative and strictly increasing.
EnergyScan energy_scan(const ShutterConfig& config, std::span<const double> energies_j, double tau_s,
                       unsigned threads = 1);

/// `n` evenly spaced values from `lo` to `hi` inclusive (`lo` alone when n == 1).
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace kerrsim::shutter
