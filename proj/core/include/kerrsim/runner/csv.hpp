#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "kerrsim/shutter/response.hpp"

namespace kerrsim::runner {

/// Minimal CSV table: a header row and string cells, written with '\n' endings.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
  void write(const std::filesystem::path& path) const;
};

/// Fixed "%.10g" formatting; non-finite values print as "nan"/"inf"/"-inf".
std::string format_number(double value);

/// Columns `tau_ps,efficiency`.
CsvTable to_csv(const shutter::ResponseCurve& curve);

/// Columns `energy_nJ,efficiency`.
CsvTable to_csv(const shutter::EnergyScan& scan);

/// Parses a CSV produced by CsvTable::str (no quoting). Used by tests and
/// manifest verification.
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace kerrsim::runner
