#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "kerrsim/error.hpp"
#include "kerrsim/shutter/kerr_shutter.hpp"
#include "kerrsim/shutter/response.hpp"

using namespace kerrsim;
using shutter::ShutterConfig;
constexpr double pi = std::numbers::pi;

namespace {

ShutterConfig calibrated_default() { return shutter::calibrated(ShutterConfig{}, pi, 3e-9, 0.0); }

std::vector<double> grid_ps(double lo, double hi, std::size_t n) {
  auto g = shutter::linspace(lo, hi, n);
  for (auto& x : g) x *= 1e-12;
  return g;
}

}  // namespace

// FWHM values below are from tests/oracles/response_oracle.py, which uses
// the erf closed form of the phase and a direct grid convolution.
TEST(Response, IntrinsicWidthMatchesOracle) {
  const auto curve = shutter::intrinsic_response(calibrated_default(), grid_ps(-1.2, 1.2, 481));
  EXPECT_NEAR(shutter::fwhm(curve) / 1e-12, 1.63520520870038, 2e-4);
}

TEST(Response, TotalWidthAndPeakMatchOracle) {
  const auto curve = shutter::total_response(calibrated_default(), grid_ps(-1.2, 1.2, 481));
  EXPECT_NEAR(shutter::fwhm(curve) / 1e-12, 1.6352054065430477, 2e-4);
  const double peak = *std::max_element(curve.efficiency.begin(), curve.efficiency.end());
  EXPECT_NEAR(peak, 0.99999996, 1e-6);
}

TEST(Response, ZeroWalkoffWidthEqualsPumpWidth) {
  // sin^2(pi/2 * I/I0) is one half exactly where I = I0/2
  ShutterConfig c;
  c.fiber.material = optics::SellmeierCoefficients("flat", {{1.1, 0.0}}, 0.2, 3.0);
  c = shutter::calibrated(c, pi, 3e-9, 0.0);
  const auto curve = shutter::intrinsic_response(c, grid_ps(-0.5, 0.5, 1001));
  EXPECT_NEAR(shutter::fwhm(curve), 410e-15, 1e-17);
}

TEST(Response, DeltaProfileReturnsIntrinsicCurve) {
  ShutterConfig c = calibrated_default();
  c.signal_profile = shutter::SignalProfile::delta();
  const auto d = grid_ps(-2, 2, 21);
  EXPECT_EQ(shutter::total_response(c, d).efficiency, shutter::intrinsic_response(c, d).efficiency);
}

TEST(Response, ImperfectionScalesCurve) {
  ShutterConfig c = calibrated_default();
  const auto d = grid_ps(-2, 2, 9);
  const auto ideal = shutter::intrinsic_response(c, d);
  c.imperfection = 0.967;
  const auto real = shutter::intrinsic_response(c, d);
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(real.efficiency[i], 0.967 * ideal.efficiency[i], 1e-15);
}

TEST(Response, ThreadCountDoesNotChangeResult) {
  const ShutterConfig c = calibrated_default();
  const auto d = grid_ps(-3, 3, 25);
  EXPECT_EQ(shutter::total_response(c, d, 1).efficiency, shutter::total_response(c, d, 4).efficiency);
}

TEST(Response, EfficiencyStaysInUnitInterval) {
  ShutterConfig c = calibrated_default();
  c.pump.energy_j = 9e-9;  // over-rotation: phase 3 pi
  const auto curve = shutter::total_response(c, grid_ps(-4, 4, 41));
  for (double e : curve.efficiency) {
    EXPECT_GE(e, 0.0);
    EXPECT_LE(e, 1.0);
  }
}

TEST(Response, RejectsUnsortedDelays) {
  const std::vector<double> d{0.0, -1e-12};
  EXPECT_THROW(shutter::intrinsic_response(ShutterConfig{}, d), DomainError);
}

TEST(Fwhm, TriangleAndFailureModes) {
  const std::vector<double> x{-2, -1, 0, 1, 2};
  EXPECT_DOUBLE_EQ(shutter::fwhm(x, std::vector<double>{0, 1, 2, 1, 0}), 2.0);
  EXPECT_THROW(shutter::fwhm(x, std::vector<double>{2, 2, 2, 1, 0}), ShapeError);
  EXPECT_THROW(shutter::fwhm(x, std::vector<double>{0, 0, 0, 0, 0}), ShapeError);
  EXPECT_THROW(shutter::fwhm(x, std::vector<double>{0, 1}), ShapeError);
}

TEST(EnergyScan, FollowsSinSquaredOfLinearPhase) {
  const ShutterConfig c = calibrated_default();
  const auto e = shutter::linspace(0.0, 3e-9, 31);
  const auto scan = shutter::energy_scan(c, e, 0.0);
  EXPECT_NEAR(scan.kappa_rad_per_j * 3e-9, pi, 1e-12);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double expected = std::pow(std::sin(0.5 * scan.kappa_rad_per_j * e[i]), 2);
    EXPECT_NEAR(scan.efficiency[i], expected, 1e-12);
  }
  EXPECT_EQ(scan.efficiency.front(), 0.0);
}

TEST(EnergyScan, RejectsNegativeEnergy) {
  const std::vector<double> e{-1e-9, 1e-9};
  EXPECT_THROW(shutter::energy_scan(ShutterConfig{}, e, 0.0), DomainError);
}

TEST(Linspace, Endpoints) {
  const auto g = shutter::linspace(-4.0, 4.0, 161);
  EXPECT_EQ(g.front(), -4.0);
  EXPECT_EQ(g.back(), 4.0);
  EXPECT_EQ(g[80], 0.0);
  EXPECT_EQ(shutter::linspace(2.0, 5.0, 1), std::vector<double>{2.0});
}
