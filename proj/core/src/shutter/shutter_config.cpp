#include "kerrsim/shutter/shutter_config.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kerrsim/error.hpp"

namespace kerrsim::shutter {

namespace {

double fwhm_to_sigma(double fwhm) { return fwhm / (2.0 * std::sqrt(2.0 * std::numbers::ln2)); }

}  // namespace

double FiberSpec::area_from_mode_field_diameter(double mfd_m) {
  const double r = 0.5 * mfd_m;
  return std::numbers::pi * r * r;
}

void FiberSpec::validate() const {
  if (!(length_m > 0.0)) throw DomainError("fiber length must be positive");
  if (!(n2_m2_per_w > 0.0)) throw DomainError("fiber n2 must be positive");
  if (!(effective_area_m2 > 0.0)) throw DomainError("fiber effective area must be positive");
}

std::string_view to_string(SignalProfileKind kind) {
  switch (kind) {
    case SignalProfileKind::delta:
      return "delta";
    case SignalProfileKind::gaussian:
      return "gaussian";
    case SignalProfileKind::gaussian_rect:
      return "gaussian_rect";
  }
  return "unknown";
}

SignalProfileKind parse_signal_profile_kind(std::string_view text) {
  if (text == "delta") return SignalProfileKind::delta;
  if (text == "gaussian") return SignalProfileKind::gaussian;
  if (text == "gaussian_rect") return SignalProfileKind::gaussian_rect;
  throw DomainError("unknown signal profile '" + std::string(text) + "' (expected delta, gaussian or gaussian_rect)");
}

double SignalProfile::weight(double t_s) const {
  switch (kind) {
    case SignalProfileKind::delta:
      return 0.0;
    case SignalProfileKind::gaussian: {
      const double s = fwhm_to_sigma(gaussian_fwhm_s);
      const double x = t_s / s;
      return std::exp(-0.5 * x * x) / (s * std::sqrt(2.0 * std::numbers::pi));
    }
    case SignalProfileKind::gaussian_rect: {
      const double k = 1.0 / (std::numbers::sqrt2 * fwhm_to_sigma(gaussian_fwhm_s));
      const double half = 0.5 * rect_width_s;
      return 0.5 * (std::erf((t_s + half) * k) - std::erf((t_s - half) * k)) / rect_width_s;
    }
  }
  return 0.0;
}

double SignalProfile::support_half_width() const {
  switch (kind) {
    case SignalProfileKind::delta:
      return 0.0;
    case SignalProfileKind::gaussian:
      return 9.0 * fwhm_to_sigma(gaussian_fwhm_s);
    case SignalProfileKind::gaussian_rect:
      return 0.5 * rect_width_s + 9.0 * fwhm_to_sigma(gaussian_fwhm_s);
  }
  return 0.0;
}

void SignalProfile::validate() const {
  if (kind == SignalProfileKind::delta) return;
  if (!(gaussian_fwhm_s > 0.0)) throw DomainError("signal profile gaussian FWHM must be positive");
  if (kind == SignalProfileKind::gaussian_rect && !(rect_width_s > 0.0)) {
    throw DomainError("signal profile rectangle width must be positive");
  }
}

double ShutterConfig::walkoff_s_per_m() const {
  return optics::walkoff(fiber.material, pump.center_wavelength_m, signal_wavelength_m);
}

optics::JonesVector ShutterConfig::signal_polarization() const {
  return optics::JonesVector::linear(pump.polarization_rad - theta_rad);
}

void ShutterConfig::validate() const {
  fiber.validate();
  pump.validate();
  signal_profile.validate();
  if (!(signal_wavelength_m > 0.0)) throw DomainError("signal wavelength must be positive");
  if (!(theta_rad >= 0.0) || theta_rad > 0.5 * std::numbers::pi + 1e-15) {
    throw DomainError("theta must lie in [0, 90] degrees");
  }
  if (calibration && !(*calibration > 0.0)) throw DomainError("calibration scalar must be positive");
  if (!(imperfection >= 0.0) || imperfection > 1.0) throw DomainError("imperfection multiplier must lie in [0, 1]");
  if (!(quadrature.rel_tol > 0.0) || quadrature.base_panels < 1 || quadrature.max_depth < 1) {
    throw DomainError("quadrature resolution parameters must be positive");
  }
}

}  // namespace kerrsim::shutter
