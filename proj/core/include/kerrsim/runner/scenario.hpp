#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kerrsim/optics/sellmeier.hpp"
#include "kerrsim/shutter/shutter_config.hpp"
#include "kerrsim/stats/source_model.hpp"

namespace kerrsim::runner {

enum class ScanType { delay, energy, g2 };

std::string_view to_string(ScanType type);
ScanType parse_scan_type(std::string_view text);

/// A scenario file as written by the user.
///
/// Fields hold the numbers in the units named by their keys (nm, fs, nJ, ...);
/// conversion to SI happens in build_shutter_config / build_source_model.
/// Keeping file units here makes parse -> serialize -> parse exact.
struct ScenarioConfig {
  struct Material {
    std::vector<double> b;
    std::vector<double> c_um2;
    double min_um = 0.0;
    double max_um = 0.0;
    bool operator==(const Material&) const = default;
  };
  std::map<std::string, Material> materials;  // in addition to the built-in fused_silica

  struct Fiber {
    std::string material = "fused_silica";
    double length_m = 0.10;
    double n2_m2_per_W = 2.7e-20;
    double mode_field_diameter_um = 4.5;
    std::optional<double> effective_area_um2;  // overrides the mode-field diameter
    bool operator==(const Fiber&) const = default;
  } fiber;

  struct Pump {
    double wavelength_nm = 800.0;
    double fwhm_fs = 410.0;
    double energy_nJ = 3.0;
    std::string shape = "gaussian";
    double polarization_deg = 0.0;
    bool operator==(const Pump&) const = default;
  } pump;

  struct Signal {
    double wavelength_nm = 685.0;
    std::string profile = "gaussian_rect";
    double gaussian_fwhm_fs = 100.0;
    double rect_width_fs = 380.0;
    bool operator==(const Signal&) const = default;
  } signal;

  struct Shutter {
    double theta_deg = 45.0;
    std::optional<double> calibration;  // empty: "auto"
    double calibration_phase_rad = 3.141592653589793;
    double calibration_energy_nJ = 3.0;
    double imperfection = 0.967;
    double rel_tol = 1e-6;
    bool operator==(const Shutter&) const = default;
  } shutter;

  struct Source {
    std::optional<double> mean_pairs;  // empty: "auto", calibrated to target_g2
    double target_g2 = 0.0076;
    std::string pair_statistics = "thermal";
    double idler_efficiency = 1.0;
    double signal_transmission = 0.1;
    double dark_count_prob = 1e-6;
    double analyzer_extinction = 0.01;
    std::string noise_statistics = "poissonian";
    int noise_modes = 15;
    bool operator==(const Source&) const = default;
  } source;

  struct Noise {
    std::string model = "power_law";
    double reference_per_pulse = 1.3e-4;
    double reference_energy_nJ = 3.0;
    double exponent = 3.0;
    std::vector<std::pair<double, double>> table_nJ;  // (energy nJ, photons per pulse)
    bool operator==(const Noise&) const = default;
  } noise;

  struct Scan {
    ScanType type = ScanType::delay;
    double delay_min_ps = -4.0;
    double delay_max_ps = 4.0;
    std::uint64_t steps = 161;
    double energy_min_nJ = 0.0;
    double energy_max_nJ = 3.0;
    double delay_ps = 0.0;  // fixed delay for energy and g2 scans
    std::uint64_t pulses = 10'000'000;
    std::optional<std::uint64_t> seed;
    bool operator==(const Scan&) const = default;
  } scan;

  struct Output {
    std::string directory = "out";
    std::vector<std::string> formats{"csv"};
    bool operator==(const Output&) const = default;
  } output;

  bool operator==(const ScenarioConfig&) const = default;
};

/// Parses INI text. Unknown sections or keys, malformed numbers and
/// duplicate keys raise ConfigError naming the offending entry.
ScenarioConfig parse_scenario(std::string_view text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Canonical INI text; every field written, doubles in shortest round-trip form.
std::string serialize_scenario(const ScenarioConfig& config);

/// Cross-field checks (material resolves, grid non-empty, seed present for
/// stochastic scans, ...). Throws ConfigError.
void validate_scenario(const ScenarioConfig& config);

optics::SellmeierCoefficients resolve_material(const ScenarioConfig& config, const std::string& name);

/// SI shutter configuration; "auto" calibration is solved here.
shutter::ShutterConfig build_shutter_config(const ScenarioConfig& config);

/// Source model for the unswitched input photons; "auto" mean pairs is solved here.
stats::SourceModel build_source_model(const ScenarioConfig& config);

stats::NoiseModel build_noise_model(const ScenarioConfig& config);

/// Scan abscissa in SI (delays in s or energies in J).
std::vector<double> scan_grid(const ScenarioConfig& config);

}  // namespace kerrsim::runner
