#include "kerrsim/optics/sellmeier.hpp"

#include <cmath>
#include <cstdio>

#include "kerrsim/error.hpp"
#include "kerrsim/units.hpp"

namespace kerrsim::optics {

namespace {

std::string out_of_range_message(const SellmeierCoefficients& c, double wavelength_m, const char* what) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s: wavelength %.6g um outside %s validity window [%.6g, %.6g] um", what,
                wavelength_m / units::um, c.name().c_str(), c.min_wavelength_um(), c.max_wavelength_um());
  return buf;
}

// n^2 - 1 and its derivative with respect to lambda (both in um units).
struct SellmeierSum {
  double value = 0.0;
  double derivative = 0.0;
};

SellmeierSum evaluate(const SellmeierCoefficients& coeffs, double lambda_um) {
  SellmeierSum s;
  const double l2 = lambda_um * lambda_um;
  for (const auto& t : coeffs.terms()) {
    const double denom = l2 - t.c_um2;
    s.value += t.b * l2 / denom;
    s.derivative += -2.0 * t.b * t.c_um2 * lambda_um / (denom * denom);
  }
  return s;
}

}  // namespace

SellmeierCoefficients::SellmeierCoefficients(std::string name, std::vector<SellmeierTerm> terms, double min_um,
                                             double max_um)
    : name_(std::move(name)), terms_(std::move(terms)), min_um_(min_um), max_um_(max_um) {
  if (terms_.empty()) throw DomainError("Sellmeier model '" + name_ + "' needs at least one term");
  if (!(min_um_ > 0.0) || !(max_um_ > min_um_)) {
    throw DomainError("Sellmeier model '" + name_ + "' has an empty or non-positive validity window");
  }
  for (const auto& t : terms_) {
    if (!(t.b >= 0.0) || !(t.c_um2 >= 0.0) || !std::isfinite(t.b) || !std::isfinite(t.c_um2)) {
      throw DomainError("Sellmeier model '" + name_ + "' has a negative or non-finite coefficient");
    }
    if (t.c_um2 >= min_um_ * min_um_ && t.c_um2 <= max_um_ * max_um_) {
      throw DomainError("Sellmeier model '" + name_ + "' has a resonance inside its validity window");
    }
  }
}

SellmeierCoefficients SellmeierCoefficients::fused_silica() {
  return SellmeierCoefficients("fused_silica",
                               {{0.6961663, 0.0684043 * 0.0684043},
                                {0.4079426, 0.1162414 * 0.1162414},
                                {0.8974794, 9.896161 * 9.896161}},
                               0.21, 3.71);
}

// Wavelengths within this relative distance of an edge count as on it, so
// that 0.21e-6 m and 0.21 um compare equal despite the unit conversion.
constexpr double kEdgeTolerance = 1e-12;

bool SellmeierCoefficients::contains(double wavelength_m) const {
  const double um = wavelength_m / units::um;
  return um >= min_um_ * (1.0 - kEdgeTolerance) && um <= max_um_ * (1.0 + kEdgeTolerance);
}

bool SellmeierCoefficients::strictly_contains(double wavelength_m) const {
  const double um = wavelength_m / units::um;
  return um > min_um_ * (1.0 + kEdgeTolerance) && um < max_um_ * (1.0 - kEdgeTolerance);
}

double refractive_index(const SellmeierCoefficients& coeffs, double wavelength_m) {
  if (!coeffs.contains(wavelength_m)) {
    throw RangeError(out_of_range_message(coeffs, wavelength_m, "refractive_index"));
  }
  return std::sqrt(1.0 + evaluate(coeffs, wavelength_m / units::um).value);
}

DispersionResult group_index(const SellmeierCoefficients& coeffs, double wavelength_m) {
  if (!coeffs.strictly_contains(wavelength_m)) {
    throw RangeError(out_of_range_message(coeffs, wavelength_m, "group_index"));
  }
  const double lambda_um = wavelength_m / units::um;
  const SellmeierSum s = evaluate(coeffs, lambda_um);
  const double n = std::sqrt(1.0 + s.value);
  const double dn_dlambda = s.derivative / (2.0 * n);

  DispersionResult r;
  r.n_phase = n;
  r.n_group = n - lambda_um * dn_dlambda;
  r.group_velocity = units::speed_of_light / r.n_group;
  return r;
}

double walkoff(const SellmeierCoefficients& coeffs, double pump_wavelength_m, double signal_wavelength_m) {
  const double ng_pump = group_index(coeffs, pump_wavelength_m).n_group;
  const double ng_signal = group_index(coeffs, signal_wavelength_m).n_group;
  return (ng_pump - ng_signal) / units::speed_of_light;
}

}  // namespace kerrsim::optics
