#include <gtest/gtest.h>

#include <cmath>

#include "kerrsim/error.hpp"
#include "kerrsim/optics/sellmeier.hpp"
#include "kerrsim/units.hpp"

using namespace kerrsim;
using optics::SellmeierCoefficients;

// Reference values from tests/oracles/sellmeier_oracle.py (40-digit mpmath,
// numerical differentiation of the same three-term fit).
TEST(Sellmeier, FusedSilicaMatchesOracle) {
  const auto fs = SellmeierCoefficients::fused_silica();
  const auto p = optics::group_index(fs, 800e-9);
  const auto s = optics::group_index(fs, 685e-9);
  EXPECT_NEAR(p.n_phase, 1.45331725485874, 1e-13);
  EXPECT_NEAR(p.n_group, 1.46714475535156, 1e-13);
  EXPECT_NEAR(s.n_phase, 1.45564280184031, 1e-13);
  EXPECT_NEAR(s.n_group, 1.47204697376557, 1e-13);
  EXPECT_NEAR(optics::walkoff(fs, 800e-9, 685e-9), -1.6352040497315e-11, 1e-23);
}

TEST(Sellmeier, GroupVelocityIsCOverNg) {
  const auto r = optics::group_index(SellmeierCoefficients::fused_silica(), 1.55e-6);
  EXPECT_NEAR(r.group_velocity * r.n_group, units::speed_of_light, 1e-3);
}

TEST(Sellmeier, AnalyticDerivativeMatchesFiniteDifference) {
  const auto fs = SellmeierCoefficients::fused_silica();
  for (int i = 0; i < 20; ++i) {
    const double lam = 0.3e-6 + i * (3.3e-6 / 19.0);
    const double h = 1e-11;
    const double dn = (optics::refractive_index(fs, lam + h) - optics::refractive_index(fs, lam - h)) / (2 * h);
    const double ng_fd = optics::refractive_index(fs, lam) - lam * dn;
    EXPECT_NEAR(optics::group_index(fs, lam).n_group, ng_fd, 1e-6) << lam;
  }
}

TEST(Sellmeier, TrivialMediumHasUnitIndex) {
  const SellmeierCoefficients vacuum("vacuum", {{0.0, 0.0}}, 0.1, 10.0);
  const auto r = optics::group_index(vacuum, 1e-6);
  EXPECT_DOUBLE_EQ(r.n_phase, 1.0);
  EXPECT_DOUBLE_EQ(r.n_group, 1.0);
  EXPECT_DOUBLE_EQ(optics::walkoff(vacuum, 0.8e-6, 0.685e-6), 0.0);
}

TEST(Sellmeier, NonDispersiveMediumHasNoWalkoff) {
  // C = 0: n^2 = 1 + B for every wavelength
  const SellmeierCoefficients flat("flat", {{1.25, 0.0}}, 0.1, 10.0);
  EXPECT_NEAR(optics::refractive_index(flat, 0.5e-6), 1.5, 1e-15);
  EXPECT_NEAR(optics::group_index(flat, 2e-6).n_group, 1.5, 1e-15);
  EXPECT_DOUBLE_EQ(optics::walkoff(flat, 0.8e-6, 0.685e-6), 0.0);
}

TEST(Sellmeier, NormalDispersionMakesRedPulseFaster) {
  const auto fs = SellmeierCoefficients::fused_silica();
  EXPECT_LT(optics::walkoff(fs, 800e-9, 685e-9), 0.0);
  EXPECT_DOUBLE_EQ(optics::walkoff(fs, 800e-9, 685e-9), -optics::walkoff(fs, 685e-9, 800e-9));
}

TEST(Sellmeier, OutOfWindowThrows) {
  const auto fs = SellmeierCoefficients::fused_silica();
  EXPECT_THROW(optics::refractive_index(fs, 0.2e-6), RangeError);
  EXPECT_THROW(optics::refractive_index(fs, 4e-6), RangeError);
  EXPECT_NO_THROW(optics::refractive_index(fs, 0.21e-6));
  EXPECT_THROW(optics::group_index(fs, 0.21e-6), RangeError);
  EXPECT_THROW(optics::group_index(fs, 3.71e-6), RangeError);
  EXPECT_NO_THROW(optics::refractive_index(fs, 3.71e-6));
}

TEST(Sellmeier, InvalidCoefficientsRejected) {
  EXPECT_THROW(SellmeierCoefficients("neg", {{-0.1, 0.01}}, 0.2, 2.0), DomainError);
  EXPECT_THROW(SellmeierCoefficients("negc", {{0.1, -0.01}}, 0.2, 2.0), DomainError);
  // resonance at 1 um inside the window
  EXPECT_THROW(SellmeierCoefficients("pole", {{0.1, 1.0}}, 0.2, 2.0), DomainError);
  EXPECT_THROW(SellmeierCoefficients("window", {{0.1, 0.01}}, 2.0, 0.2), DomainError);
  EXPECT_THROW(SellmeierCoefficients("empty", {}, 0.2, 2.0), DomainError);
}
