#include "kerrsim/optics/pulse.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kerrsim/error.hpp"

namespace kerrsim::optics {

namespace {

// sech^2(t/T0) falls to one half at t = T0 * acosh(sqrt(2)).
const double kSech2FwhmPerT0 = 2.0 * std::acosh(std::numbers::sqrt2);
const double kGaussExponent = 4.0 * std::numbers::ln2;

}  // namespace

std::string_view to_string(PulseShape shape) {
  switch (shape) {
    case PulseShape::gaussian:
      return "gaussian";
    case PulseShape::sech2:
      return "sech2";
  }
  return "unknown";
}

PulseShape parse_pulse_shape(std::string_view text) {
  if (text == "gaussian") return PulseShape::gaussian;
  if (text == "sech2") return PulseShape::sech2;
  throw DomainError("unknown pulse shape '" + std::string(text) + "' (expected gaussian or sech2)");
}

void Pulse::validate() const {
  if (!(fwhm_s > 0.0) || !std::isfinite(fwhm_s)) throw DomainError("pulse FWHM must be positive");
  if (!(energy_j >= 0.0) || !std::isfinite(energy_j)) throw DomainError("pulse energy must be non-negative");
  if (!(center_wavelength_m > 0.0) || !std::isfinite(center_wavelength_m)) {
    throw DomainError("pulse wavelength must be positive");
  }
}

double unit_profile(PulseShape shape, double fwhm_s, double t_s) {
  switch (shape) {
    case PulseShape::gaussian: {
      const double x = t_s / fwhm_s;
      return std::exp(-kGaussExponent * x * x);
    }
    case PulseShape::sech2: {
      const double x = t_s * kSech2FwhmPerT0 / fwhm_s;
      if (std::abs(x) > 350.0) return 0.0;
      const double s = 1.0 / std::cosh(x);
      return s * s;
    }
  }
  return 0.0;
}

double unit_profile_area(PulseShape shape, double fwhm_s) {
  switch (shape) {
    case PulseShape::gaussian:
      return fwhm_s * std::sqrt(std::numbers::pi / kGaussExponent);
    case PulseShape::sech2:
      return 2.0 * fwhm_s / kSech2FwhmPerT0;
  }
  return 0.0;
}

double peak_intensity(const Pulse& pulse, double area_m2) {
  if (!(area_m2 > 0.0)) throw DomainError("pulse_intensity: effective area must be positive");
  return pulse.energy_j / (area_m2 * unit_profile_area(pulse.shape, pulse.fwhm_s));
}

double pulse_intensity(const Pulse& pulse, double area_m2, double t_s) {
  return peak_intensity(pulse, area_m2) * unit_profile(pulse.shape, pulse.fwhm_s, t_s);
}

}  // namespace kerrsim::optics
