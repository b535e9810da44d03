#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kerrsim/error.hpp"
#include "kerrsim/numeric/quadrature.hpp"
#include "kerrsim/optics/pulse.hpp"
#include "kerrsim/shutter/shutter_config.hpp"

using namespace kerrsim;
using optics::PulseShape;

class PulseShapes : public ::testing::TestWithParam<PulseShape> {};

TEST_P(PulseShapes, UnitPeakAndHalfMaximumAtHalfFwhm) {
  const double fwhm = 410e-15;
  EXPECT_DOUBLE_EQ(optics::unit_profile(GetParam(), fwhm, 0.0), 1.0);
  EXPECT_NEAR(optics::unit_profile(GetParam(), fwhm, 0.5 * fwhm), 0.5, 1e-14);
  EXPECT_NEAR(optics::unit_profile(GetParam(), fwhm, -0.5 * fwhm), 0.5, 1e-14);
}

TEST_P(PulseShapes, AreaMatchesQuadrature) {
  const double fwhm = 1.0;
  numeric::QuadratureOptions o;
  o.rel_tol = 1e-12;
  const auto q = numeric::adaptive_simpson([&](double t) { return optics::unit_profile(GetParam(), fwhm, t); },
                                           -40.0, 40.0, o);
  EXPECT_NEAR(q.value, optics::unit_profile_area(GetParam(), fwhm), 1e-10);
}

TEST_P(PulseShapes, IntensityIntegratesToEnergy) {
  optics::Pulse p;
  p.shape = GetParam();
  const double area = 1.6e-11;
  numeric::QuadratureOptions o;
  o.rel_tol = 1e-10;
  const auto q = numeric::adaptive_simpson([&](double t) { return optics::pulse_intensity(p, area, t); },
                                           -40 * p.fwhm_s, 40 * p.fwhm_s, o);
  EXPECT_NEAR(q.value * area / p.energy_j, 1.0, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Shapes, PulseShapes, ::testing::Values(PulseShape::gaussian, PulseShape::sech2));

TEST(Pulse, ParseRoundTripAndRejectUnknown) {
  EXPECT_EQ(optics::parse_pulse_shape(optics::to_string(PulseShape::sech2)), PulseShape::sech2);
  EXPECT_EQ(optics::parse_pulse_shape("gaussian"), PulseShape::gaussian);
  EXPECT_THROW(optics::parse_pulse_shape("lorentzian"), DomainError);
}

TEST(Pulse, ValidateRejectsNonPhysical) {
  optics::Pulse p;
  p.fwhm_s = 0.0;
  EXPECT_THROW(p.validate(), DomainError);
  p = {};
  p.energy_j = -1e-9;
  EXPECT_THROW(p.validate(), DomainError);
  p = {};
  p.energy_j = 0.0;
  EXPECT_NO_THROW(p.validate());
  EXPECT_THROW(optics::peak_intensity(p, 0.0), DomainError);
}

TEST(SignalProfile, WeightsAreNormalised) {
  for (auto kind : {shutter::SignalProfileKind::gaussian, shutter::SignalProfileKind::gaussian_rect}) {
    shutter::SignalProfile s;
    s.kind = kind;
    const double h = s.support_half_width();
    numeric::QuadratureOptions o;
    o.rel_tol = 1e-10;
    o.base_panels = 200;
    const auto q = numeric::adaptive_simpson([&](double t) { return s.weight(t); }, -h, h, o);
    EXPECT_NEAR(q.value, 1.0, 1e-9) << shutter::to_string(kind);
  }
}

TEST(SignalProfile, GaussianRectIsFlatTopped) {
  shutter::SignalProfile s;
  // (1 / R) * P(|gaussian| < R/2) at the centre, (1 / 2R) * P(0 < g < R) at the edge
  const double sigma_sqrt2 = s.gaussian_fwhm_s / (2.0 * std::sqrt(2.0 * std::log(2.0))) * std::numbers::sqrt2;
  EXPECT_NEAR(s.weight(0.0) * s.rect_width_s, std::erf(0.5 * s.rect_width_s / sigma_sqrt2), 1e-12);
  EXPECT_NEAR(s.weight(0.5 * s.rect_width_s) * s.rect_width_s, 0.5 * std::erf(s.rect_width_s / sigma_sqrt2), 1e-12);
  EXPECT_EQ(shutter::SignalProfile::delta().weight(0.0), 0.0);
}

TEST(FiberSpec, AreaFromModeFieldDiameter) {
  EXPECT_NEAR(shutter::FiberSpec::area_from_mode_field_diameter(4.5e-6), std::numbers::pi * 2.25e-6 * 2.25e-6,
              1e-24);
}
