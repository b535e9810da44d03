#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kerrsim/error.hpp"
#include "kerrsim/optics/pulse.hpp"
#include "kerrsim/shutter/kerr_shutter.hpp"

using namespace kerrsim;
using shutter::ShutterConfig;
constexpr double pi = std::numbers::pi;

namespace {

// Full sweep: the pump passes entirely through the signal, so the z-integral
// becomes the time integral of the intensity divided by |d_w|.
double full_sweep_phase(const ShutterConfig& c) {
  return 2.0 * pi * c.effective_n2() * c.pump.energy_j /
         (c.signal_wavelength_m * c.fiber.effective_area_m2 * std::abs(c.walkoff_s_per_m()));
}

ShutterConfig long_fiber() {
  ShutterConfig c;
  c.fiber.length_m = 0.2;  // sweep 3.3 ps, eight pump FWHM
  return c;
}

}  // namespace

TEST(KerrShutter, FullSweepMatchesClosedForm) {
  ShutterConfig c = long_fiber();
  for (double e : {0.3e-9, 1e-9, 2.5e-9, 7e-9}) {
    c.pump.energy_j = e;
    const double ref = full_sweep_phase(c);
    EXPECT_NEAR(shutter::nonlinear_phase(c, 0.0) / ref, 1.0, 1e-6) << e;
  }
}

TEST(KerrShutter, SechPumpFullSweepMatchesClosedForm) {
  ShutterConfig c = long_fiber();
  c.fiber.length_m = 0.5;  // sech^2 tails are longer
  c.pump.shape = optics::PulseShape::sech2;
  EXPECT_NEAR(shutter::nonlinear_phase(c, 0.0) / full_sweep_phase(c), 1.0, 1e-6);
}

TEST(KerrShutter, PhaseIsLinearInEnergyAndZeroWithoutPump) {
  ShutterConfig c;
  c.pump.energy_j = 1e-9;
  const double one = shutter::nonlinear_phase(c, 0.2e-12);
  c.pump.energy_j = 2.5e-9;
  EXPECT_NEAR(shutter::nonlinear_phase(c, 0.2e-12), 2.5 * one, 1e-9 * one);
  c.pump.energy_j = 0.0;
  EXPECT_EQ(shutter::nonlinear_phase(c, 0.2e-12), 0.0);
}

TEST(KerrShutter, PhaseIsSymmetricInDelay) {
  const ShutterConfig c;
  for (double tau : {0.1e-12, 0.5e-12, 0.9e-12, 1.5e-12}) {
    EXPECT_NEAR(shutter::nonlinear_phase(c, tau), shutter::nonlinear_phase(c, -tau),
                1e-7 * shutter::nonlinear_phase(c, 0.0));
  }
}

TEST(KerrShutter, FarOutsideOverlapIsNegligible) {
  const ShutterConfig c;
  EXPECT_LT(shutter::nonlinear_phase(c, 5e-12), 1e-6);
  EXPECT_LT(shutter::nonlinear_phase(c, -5e-12), 1e-6);
}

TEST(KerrShutter, NoWalkoffReducesToLengthTimesIntensity) {
  ShutterConfig c;
  c.fiber.material = optics::SellmeierCoefficients("flat", {{1.1, 0.0}}, 0.2, 3.0);
  ASSERT_EQ(c.walkoff_s_per_m(), 0.0);
  const double tau = 0.3e-12;
  const double expected = 2.0 * pi * c.fiber.n2_m2_per_w / c.signal_wavelength_m * c.fiber.length_m *
                          optics::pulse_intensity(c.pump, c.fiber.effective_area_m2, tau);
  EXPECT_NEAR(shutter::nonlinear_phase(c, tau) / expected, 1.0, 1e-12);
}

TEST(KerrShutter, HalvingStepChangesPhaseByLessThanTolerance) {
  ShutterConfig c;
  for (double tau : {0.0, 0.4e-12, 0.8e-12, 1.2e-12}) {
    ShutterConfig fine = c;
    fine.quadrature.base_panels *= 2;
    fine.quadrature.rel_tol *= 0.5;
    const double a = shutter::nonlinear_phase(c, tau);
    const double b = shutter::nonlinear_phase(fine, tau);
    EXPECT_LT(std::abs(a - b) / b, 1e-6) << tau;
  }
}

TEST(KerrShutter, CalibrationHitsTargetPhase) {
  const ShutterConfig c = shutter::calibrated(ShutterConfig{}, pi, 3e-9, 0.0);
  ASSERT_TRUE(c.calibration.has_value());
  // oracle: 0.1 m Malitson silica, 4.5 um MFD, n2 2.7e-20 -> scale 1.0997
  EXPECT_NEAR(*c.calibration, 1.0997, 5e-4);
  EXPECT_NEAR(shutter::nonlinear_phase(c, 0.0), pi, 1e-12);
  EXPECT_NEAR(shutter::switching_efficiency(c.theta_rad, shutter::nonlinear_phase(c, 0.0)), 1.0, 1e-12);
}

TEST(KerrShutter, CalibrationRejectsNoOverlap) {
  EXPECT_THROW(shutter::calibrated(ShutterConfig{}, pi, 3e-9, 20e-12), DomainError);
  EXPECT_THROW(shutter::calibrated(ShutterConfig{}, pi, 0.0, 0.0), DomainError);
}

TEST(KerrShutter, DepthLimitRaisesConvergenceError) {
  ShutterConfig c;
  c.quadrature.rel_tol = 1e-15;
  c.quadrature.max_depth = 1;
  EXPECT_THROW(shutter::nonlinear_phase(c, 0.3e-12), ConvergenceError);
}

TEST(KerrShutter, EfficiencyFormula) {
  EXPECT_NEAR(shutter::switching_efficiency(pi / 4, pi), 1.0, 1e-15);
  EXPECT_NEAR(shutter::switching_efficiency(pi / 8, pi), 0.5, 1e-15);
  EXPECT_NEAR(shutter::switching_efficiency(pi / 4, pi / 2), 0.5, 1e-15);
  EXPECT_EQ(shutter::switching_efficiency(0.0, pi), 0.0);
}

TEST(KerrShutter, ConfigValidation) {
  ShutterConfig c;
  c.imperfection = 1.2;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.calibration = -1.0;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.signal_wavelength_m = 5e-6;  // outside the silica window
  EXPECT_THROW(c.walkoff_s_per_m(), RangeError);
}
