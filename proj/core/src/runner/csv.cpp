#include "kerrsim/runner/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kerrsim/error.hpp"
#include "kerrsim/units.hpp"

namespace kerrsim::runner {

namespace {

void append_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    out += cells[i];
  }
  out += '\n';
}

}  // namespace

std::string CsvTable::str() const {
  std::string out;
  append_row(out, header);
  for (const auto& r : rows) append_row(out, r);
  return out;
}

void CsvTable::write(const std::filesystem::path& path) const {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  const std::string text = str();
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw Error("failed writing " + path.string());
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

CsvTable to_csv(const shutter::ResponseCurve& curve) {
  CsvTable t;
  t.header = {"tau_ps", "efficiency"};
  for (std::size_t i = 0; i < curve.delays_s.size(); ++i) {
    t.rows.push_back({format_number(curve.delays_s[i] / units::ps), format_number(curve.efficiency[i])});
  }
  return t;
}

CsvTable to_csv(const shutter::EnergyScan& scan) {
  CsvTable t;
  t.header = {"energy_nJ", "efficiency"};
  for (std::size_t i = 0; i < scan.energies_j.size(); ++i) {
    t.rows.push_back({format_number(scan.energies_j[i] / units::nJ), format_number(scan.efficiency[i])});
  }
  return t;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path.string());
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(f, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

}  // namespace kerrsim::runner
