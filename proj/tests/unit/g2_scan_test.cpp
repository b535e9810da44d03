#include <gtest/gtest.h>

#include <cmath>

#include "kerrsim/error.hpp"
#include "kerrsim/shutter/kerr_shutter.hpp"
#include "kerrsim/stats/expectation.hpp"
#include "kerrsim/stats/g2_scan.hpp"
#include "kerrsim/stats/rng.hpp"

using namespace kerrsim;
using namespace kerrsim::stats;

namespace {

G2ScanSettings busy_settings() {
  G2ScanSettings s;
  s.input_model.mean_pairs = 0.05;
  s.input_model.signal_transmission = 0.5;
  s.input_model.noise_statistics = NoiseStatistics::thermal;
  s.noise.reference_mean = 0.05;
  s.energies_j = {1e-9, 2e-9, 3e-9};
  s.pulses = 400'000;
  s.seed = 99;
  return s;
}

shutter::ShutterConfig shutter_config() {
  return shutter::calibrated(shutter::ShutterConfig{}, 3.141592653589793, 3e-9, 0.0);
}

}  // namespace

TEST(G2Scan, PointsCarryModelAndSeed) {
  const auto s = busy_settings();
  const auto scan = g2_vs_energy_curve(s, shutter_config());
  ASSERT_EQ(scan.points.size(), 3u);
  SourceModel input = s.input_model;
  EXPECT_DOUBLE_EQ(scan.g2_input, expected_heralded_g2(input));
  EXPECT_DOUBLE_EQ(scan.g2_noise, 1.0 + 1.0 / 15);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = scan.points[i];
    EXPECT_EQ(p.seed, derive_seed(s.seed, i));
    EXPECT_DOUBLE_EQ(p.noise_mean, s.noise.mean_at(p.energy_j));
    EXPECT_EQ(p.counts.pulses, s.pulses);
    ASSERT_TRUE(p.measured.has_value());
    // busy model: a few thousand three-folds per point
    EXPECT_LT(std::abs(p.measured->value - p.g2_model), 4.0 * p.measured->std_error) << i;
  }
  EXPECT_NEAR(scan.points[2].switch_efficiency, 1.0, 1e-9);
}

TEST(G2Scan, Deterministic) {
  const auto s = busy_settings();
  const auto a = g2_vs_energy_curve(s, shutter_config());
  const auto b = g2_vs_energy_curve(s, shutter_config());
  for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i].counts, b.points[i].counts);
}

TEST(G2Scan, RejectsEmptyInputs) {
  auto s = busy_settings();
  s.pulses = 0;
  EXPECT_THROW(g2_vs_energy_curve(s, shutter_config()), DomainError);
  s = busy_settings();
  s.energies_j.clear();
  EXPECT_THROW(g2_vs_energy_curve(s, shutter_config()), DomainError);
}

TEST(NoiseModel, PowerLawAndTable) {
  NoiseModel n;
  EXPECT_DOUBLE_EQ(n.mean_at(3e-9), 1.3e-4);
  EXPECT_NEAR(n.mean_at(1.5e-9), 1.3e-4 / 8, 1e-18);
  n.kind = NoiseModel::Kind::table;
  n.table = {{1e-9, 1e-5}, {3e-9, 3e-5}};
  EXPECT_NEAR(n.mean_at(2e-9), 2e-5, 1e-18);
  EXPECT_DOUBLE_EQ(n.mean_at(0.0), 1e-5);
  EXPECT_DOUBLE_EQ(n.mean_at(5e-9), 3e-5);
  n.kind = NoiseModel::Kind::none;
  EXPECT_EQ(n.mean_at(3e-9), 0.0);
}

TEST(SourceModel, HashTracksEveryField) {
  SourceModel a;
  SourceModel b = a;
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16u);
  b.noise_modes = 14;
  EXPECT_NE(a.hash(), b.hash());
  b = a;
  b.port = AnalyzerPort::anti_switched;
  EXPECT_NE(a.hash(), b.hash());
}

TEST(SourceModel, ArrivalProbabilityIncludesLeakage) {
  SourceModel m;
  m.signal_transmission = 0.5;
  m.switch_efficiency = 0.9;
  m.analyzer_extinction = 0.01;
  EXPECT_DOUBLE_EQ(m.port_arrival_probability(), 0.5 * (0.9 + 0.01 * 0.1));
  m.port = AnalyzerPort::anti_switched;
  EXPECT_DOUBLE_EQ(m.port_arrival_probability(), 0.5 * (0.1 + 0.01 * 0.9));
}
