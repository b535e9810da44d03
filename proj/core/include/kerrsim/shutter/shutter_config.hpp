#pragma once

#include <optional>
#include <string_view>

#include "kerrsim/numeric/quadrature.hpp"
#include "kerrsim/optics/jones.hpp"
#include "kerrsim/optics/pulse.hpp"
#include "kerrsim/optics/sellmeier.hpp"

namespace kerrsim::shutter {

/// The Kerr medium.
struct FiberSpec {
  double length_m = 0.10;
  double n2_m2_per_w = 2.7e-20;
  double effective_area_m2 = area_from_mode_field_diameter(4.5e-6);
  optics::SellmeierCoefficients material = optics::SellmeierCoefficients::fused_silica();

  static double area_from_mode_field_diameter(double mfd_m);

  void validate() const;
  bool operator==(const FiberSpec&) const = default;
};

enum class SignalProfileKind { delta, gaussian, gaussian_rect };

std::string_view to_string(SignalProfileKind kind);
SignalProfileKind parse_signal_profile_kind(std::string_view text);

/// Normalised temporal weight of the signal photon (integrates to one).
///
/// `gaussian_rect` is a gaussian of `gaussian_fwhm_s` convolved with a
/// rectangle of `rect_width_s`, evaluated in closed form with erf.
struct SignalProfile {
  SignalProfileKind kind = SignalProfileKind::gaussian_rect;
  double gaussian_fwhm_s = 100e-15;
  double rect_width_s = 380e-15;

  static SignalProfile delta() { return {SignalProfileKind::delta, 0.0, 0.0}; }

  /// Weight density at time `t_s` (1/s). Zero everywhere for `delta`.
  double weight(double t_s) const;

  /// Half-width of the interval outside which the weight is negligible.
  double support_half_width() const;

  void validate() const;
  bool operator==(const SignalProfile&) const = default;
};

/// Complete shutter scenario.
///
/// The pump delay convention: tau is the offset of the pump peak from the
/// signal photon at the fibre midpoint, so tau = 0 centres the walk-through
/// and positive tau means the pump enters the fibre later.
struct ShutterConfig {
  FiberSpec fiber;
  optics::Pulse pump;
  double signal_wavelength_m = 685e-9;
  SignalProfile signal_profile;
  double theta_rad = 0.7853981633974483;  // 45 deg between pump and signal polarizations
  std::optional<double> calibration;      // multiplies n2; unset means 1
  double imperfection = 1.0;              // multiplies every efficiency
  numeric::QuadratureOptions quadrature;

  double effective_n2() const { return fiber.n2_m2_per_w * calibration.value_or(1.0); }

  /// Pump-signal walk-off per unit length (s/m) from the fibre material.
  double walkoff_s_per_m() const;

  optics::JonesVector signal_polarization() const;

  void validate() const;
  bool operator==(const ShutterConfig&) const = default;
};

}  // namespace kerrsim::shutter
