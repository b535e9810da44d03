#include "kerrsim/optics/jones.hpp"

#include <algorithm>
#include <cmath>

namespace kerrsim::optics {

JonesVector JonesVector::linear(double angle_rad) {
  return {Complex{std::cos(angle_rad), 0.0}, Complex{std::sin(angle_rad), 0.0}};
}

JonesVector JonesVector::normalized() const {
  const double n = std::sqrt(norm_squared());
  return {h / n, v / n};
}

Complex inner(const JonesVector& a, const JonesVector& b) { return std::conj(a.h) * b.h + std::conj(a.v) * b.v; }

double projection_probability(const JonesVector& analyzer, const JonesVector& state) {
  return std::norm(inner(analyzer, state));
}

JonesMatrix JonesMatrix::rotation(double angle_rad) {
  const double c = std::cos(angle_rad);
  const double s = std::sin(angle_rad);
  return {{Complex{c}, Complex{-s}, Complex{s}, Complex{c}}};
}

JonesMatrix JonesMatrix::retarder(double retardance_rad, double fast_axis_rad) {
  const JonesMatrix diag{{Complex{1.0}, Complex{0.0}, Complex{0.0}, std::polar(1.0, retardance_rad)}};
  return rotation(fast_axis_rad) * diag * rotation(-fast_axis_rad);
}

JonesMatrix JonesMatrix::adjoint() const {
  return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

double JonesMatrix::unitarity_defect() const {
  const JonesMatrix p = adjoint() * *this;
  const JonesMatrix id = identity();
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(p.m[i] - id.m[i]));
  return worst;
}

JonesVector operator*(const JonesMatrix& a, const JonesVector& x) {
  return {a.m[0] * x.h + a.m[1] * x.v, a.m[2] * x.h + a.m[3] * x.v};
}

JonesMatrix operator*(const JonesMatrix& a, const JonesMatrix& b) {
  return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
           a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

}  // namespace kerrsim::optics
