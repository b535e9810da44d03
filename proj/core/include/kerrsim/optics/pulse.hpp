#pragma once

#include <string_view>

namespace kerrsim::optics {

enum class PulseShape { gaussian, sech2 };

std::string_view to_string(PulseShape shape);
PulseShape parse_pulse_shape(std::string_view text);

/// A pump or signal pulse. All fields SI.
///
/// Any pre-chirp is folded into `fwhm_s`; no spectral phase is tracked.
struct Pulse {
  double center_wavelength_m = 800e-9;
  double fwhm_s = 410e-15;
  double energy_j = 3.0e-9;
  PulseShape shape = PulseShape::gaussian;
  double polarization_rad = 0.0;  // from horizontal

  /// Throws DomainError unless fwhm > 0, energy >= 0 and wavelength > 0.
  void validate() const;

  bool operator==(const Pulse&) const = default;
};

/// Unit-peak temporal envelope of the given shape, FWHM preserved.
double unit_profile(PulseShape shape, double fwhm_s, double t_s);

/// Integral of `unit_profile` over all time.
double unit_profile_area(PulseShape shape, double fwhm_s);

/// Peak intensity (W/m^2) for a pulse confined to `area_m2`.
double peak_intensity(const Pulse& pulse, double area_m2);

/// Instantaneous intensity at time `t_s` from the pulse peak, normalised so
/// that the time integral times the area equals the pulse energy.
double pulse_intensity(const Pulse& pulse, double area_m2, double t_s);

}  // namespace kerrsim::optics
