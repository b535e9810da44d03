#pragma once

#include <array>
#include <complex>

namespace kerrsim::optics {

using Complex = std::complex<double>;

/// Polarization state as horizontal/vertical complex amplitudes.
struct JonesVector {
  Complex h{1.0, 0.0};
  Complex v{0.0, 0.0};

  /// Linear polarization at `angle_rad` from horizontal (unit norm).
  static JonesVector linear(double angle_rad);

  double norm_squared() const { return std::norm(h) + std::norm(v); }
  JonesVector normalized() const;
};

/// <a|b>, conjugating the first argument.
Complex inner(const JonesVector& a, const JonesVector& b);

/// Probability of finding `state` in the pure state `analyzer`.
double projection_probability(const JonesVector& analyzer, const JonesVector& state);

/// Row-major 2x2 complex matrix acting on JonesVector.
struct JonesMatrix {
  std::array<Complex, 4> m{Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{1.0}};

  static JonesMatrix identity() { return {}; }

  /// Coordinate rotation by `angle_rad` (counter-clockwise).
  static JonesMatrix rotation(double angle_rad);

  /// Linear retarder: phase `retardance_rad` on the slow axis relative to the
  /// fast axis, which lies at `fast_axis_rad` from horizontal.
  static JonesMatrix retarder(double retardance_rad, double fast_axis_rad);

  JonesMatrix adjoint() const;

  /// max |(M^dagger M - I)_ij|
  double unitarity_defect() const;
};

JonesVector operator*(const JonesMatrix& a, const JonesVector& x);
JonesMatrix operator*(const JonesMatrix& a, const JonesMatrix& b);

}  // namespace kerrsim::optics
