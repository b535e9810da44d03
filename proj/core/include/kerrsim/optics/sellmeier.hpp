#pragma once

#include <string>
#include <vector>

namespace kerrsim::optics {

/// One resonance of the Sellmeier sum: B * lambda^2 / (lambda^2 - C).
struct SellmeierTerm {
  double b = 0.0;      // dimensionless oscillator strength
  double c_um2 = 0.0;  // resonance wavelength squared, um^2

  bool operator==(const SellmeierTerm&) const = default;
};

/// Sellmeier dispersion model with an explicit validity window.
///
/// Terms must have B >= 0 and C >= 0, and no resonance may fall inside the
/// window: sqrt(C) outside [min_um, max_um]. Evaluation outside [min_um, max_um] throws.
class SellmeierCoefficients {
 public:
  SellmeierCoefficients(std::string name, std::vector<SellmeierTerm> terms, double min_um, double max_um);

  /// Malitson's three-term fit for fused silica, valid 0.21-3.71 um.
  static SellmeierCoefficients fused_silica();

  const std::string& name() const { return name_; }
  const std::vector<SellmeierTerm>& terms() const { return terms_; }
  double min_wavelength_um() const { return min_um_; }
  double max_wavelength_um() const { return max_um_; }

  bool contains(double wavelength_m) const;
  bool strictly_contains(double wavelength_m) const;

  bool operator==(const SellmeierCoefficients&) const = default;

 private:
  std::string name_;
  std::vector<SellmeierTerm> terms_;
  double min_um_;
  double max_um_;
};

struct DispersionResult {
  double n_phase = 1.0;
  double n_group = 1.0;
  double group_velocity = 0.0;  // m/s
};

/// Phase index n(lambda). Throws RangeError outside the validity window.
double refractive_index(const SellmeierCoefficients& coeffs, double wavelength_m);

/// Phase and group index with the analytic Sellmeier derivative,
/// n_g = n - lambda dn/dlambda. The wavelength must lie strictly inside the window.
DispersionResult group_index(const SellmeierCoefficients& coeffs, double wavelength_m);

/// Group-delay walk-off per unit length, 1/v_g(pump) - 1/v_g(signal), in s/m.
///
/// Positive when the pump is the slower pulse. For an 800 nm pump and a
/// 685 nm signal in silica the value is negative: the pump overtakes the signal.
double walkoff(const SellmeierCoefficients& coeffs, double pump_wavelength_m, double signal_wavelength_m);

}  // namespace kerrsim::optics
