#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kerrsim::runner {

inline constexpr int kManifestSchemaVersion = 1;

/// Library version baked in at build time.
std::string code_version();

struct OutputFile {
  std::string path;                 // relative to the run directory
  std::optional<std::size_t> rows;  // data rows for CSV files
  bool operator==(const OutputFile&) const = default;
};

/// Record written as manifest.json next to the outputs of every run.
struct RunManifest {
  std::string command;
  std::string scan_type;
  std::string code_version;
  std::string config_text;  // serialized effective configuration
  std::string started_utc;
  std::string finished_utc;
  int exit_code = 0;
  std::vector<OutputFile> outputs;
  std::map<std::string, double> diagnostics;
  std::map<std::string, std::string> notes;

  std::string to_json() const;
  static RunManifest from_json(std::string_view text);
};

/// Deterministic sidecar for one data file: config snapshot, tolerances,
/// code version and any extra scalars. Contains no timestamps.
std::string sidecar_metadata(const std::string& data_file, const std::string& config_text,
                             const std::map<std::string, double>& values);

/// Checks that every listed output exists and that CSV row counts match.
/// Returns an empty string on success, otherwise a description of the mismatch.
std::string verify_manifest(const std::filesystem::path& directory, const RunManifest& manifest);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace kerrsim::runner
