#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kerrsim/optics/jones.hpp"
#include "kerrsim/shutter/kerr_shutter.hpp"

using namespace kerrsim;
using optics::JonesMatrix;
using optics::JonesVector;
constexpr double pi = std::numbers::pi;

TEST(Jones, LinearStatesAreOrthonormal) {
  for (double a = -3.0; a < 3.0; a += 0.37) {
    const auto x = JonesVector::linear(a);
    const auto y = JonesVector::linear(a + 0.5 * pi);
    EXPECT_NEAR(x.norm_squared(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(optics::inner(x, y)), 0.0, 1e-15);
  }
}

TEST(Jones, RetardersAreUnitary) {
  for (double d = 0.0; d < 7.0; d += 0.7) {
    for (double a = -1.5; a < 1.6; a += 0.3) {
      EXPECT_LT(JonesMatrix::retarder(d, a).unitarity_defect(), 1e-14);
    }
  }
}

TEST(Jones, HalfWaveAt22p5RotatesHorizontalToDiagonal) {
  const auto out = JonesMatrix::retarder(pi, pi / 8) * JonesVector::linear(0.0);
  EXPECT_NEAR(optics::projection_probability(JonesVector::linear(pi / 4), out), 1.0, 1e-15);
}

TEST(Jones, RotationComposes) {
  const auto r = JonesMatrix::rotation(0.3) * JonesMatrix::rotation(0.4);
  const auto s = JonesMatrix::rotation(0.7);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(r.m[i] - s.m[i]), 0.0, 1e-15);
}

TEST(Jones, ShutterFormulaEqualsMatrixProjectionOnGrid) {
  for (int i = 0; i < 20; ++i) {
    const double theta = 0.5 * pi * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double phase = 2.0 * pi * j / 19.0;
      ASSERT_NEAR(shutter::switching_efficiency(theta, phase), shutter::jones_switching_probability(theta, phase),
                  1e-12)
          << theta << " " << phase;
    }
  }
}

TEST(Jones, ProjectionIndependentOfPumpOrientation) {
  for (double pump = -1.0; pump < 1.0; pump += 0.25) {
    EXPECT_NEAR(shutter::jones_switching_probability(0.3, 1.1, pump), shutter::jones_switching_probability(0.3, 1.1),
                1e-14);
  }
}
