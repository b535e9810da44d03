#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "kerrsim/runner/manifest.hpp"
#include "kerrsim/runner/scenario.hpp"

namespace kerrsim::runner {

/// Process exit status of the command-line tool.
enum class ExitCode : int {
  ok = 0,
  usage = 1,
  config = 2,
  numerical = 3,
  insufficient_statistics = 4,
  io = 5,
};

struct RunOptions {
  std::optional<std::filesystem::path> out_dir;  // overrides [output] directory
  std::optional<std::uint64_t> seed;             // overrides [scan] seed
  unsigned threads = 1;
  std::string command_line;
};

struct RunReport {
  ExitCode status = ExitCode::ok;
  std::filesystem::path directory;
  RunManifest manifest;
};

/// Applies command-line overrides and validates; throws ConfigError.
ScenarioConfig effective_config(ScenarioConfig config, const RunOptions& options);

/// Total (and intrinsic) response against pump delay.
/// Writes delay_scan.csv, delay_scan_intrinsic.csv, their sidecars and manifest.json.
RunReport run_delay_scan(const ScenarioConfig& config, const RunOptions& options);

/// Switching efficiency and noise mean against pump energy.
/// Writes energy_scan.csv (energy_nJ,efficiency,noise_per_pulse), sidecar and manifest.json.
RunReport run_energy_scan(const ScenarioConfig& config, const RunOptions& options);

/// Monte Carlo heralded g2 against pump energy with the mixture-model column.
/// Rows without two-fold coincidences are flagged and the run continues; the
/// report status is then insufficient_statistics.
RunReport run_g2_scan(const ScenarioConfig& config, const RunOptions& options);

}  // namespace kerrsim::runner
