#include "kerrsim/runner/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "kerrsim/error.hpp"
#include "kerrsim/optics/pulse.hpp"
#include "kerrsim/shutter/kerr_shutter.hpp"
#include "kerrsim/shutter/response.hpp"
#include "kerrsim/stats/expectation.hpp"
#include "kerrsim/units.hpp"

namespace kerrsim::runner {

namespace pt = boost::property_tree;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// Reads the keys of one INI section and remembers which were consumed so
// leftovers can be reported as unknown.
class SectionReader {
 public:
  SectionReader(std::string name, const pt::ptree& node) : name_(std::move(name)), node_(node) {}

  void number(const char* key, double& out) {
    if (auto v = raw(key)) out = parse_double(key, *v);
  }

  void count(const char* key, std::uint64_t& out) {
    if (auto v = raw(key)) out = parse_u64(key, *v);
  }

  void count(const char* key, int& out) {
    if (auto v = raw(key)) {
      const std::uint64_t n = parse_u64(key, *v);
      if (n > 1'000'000) fail(key, "value too large");
      out = static_cast<int>(n);
    }
  }

  void text(const char* key, std::string& out) {
    if (auto v = raw(key)) out = *v;
  }

  void number_or_auto(const char* key, std::optional<double>& out) {
    if (auto v = raw(key)) {
      if (*v == "auto") {
        out.reset();
      } else {
        out = parse_double(key, *v);
      }
    }
  }

  void optional_number(const char* key, std::optional<double>& out) {
    if (auto v = raw(key)) {
      if (v->empty() || *v == "none") {
        out.reset();
      } else {
        out = parse_double(key, *v);
      }
    }
  }

  void optional_count(const char* key, std::optional<std::uint64_t>& out) {
    if (auto v = raw(key)) {
      if (v->empty() || *v == "none") {
        out.reset();
      } else {
        out = parse_u64(key, *v);
      }
    }
  }

  void numbers(const char* key, std::vector<double>& out) {
    if (auto v = raw(key)) {
      out.clear();
      if (v->empty()) return;
      for (const auto& item : split(*v, ',')) out.push_back(parse_double(key, item));
    }
  }

  void words(const char* key, std::vector<std::string>& out) {
    if (auto v = raw(key)) {
      out.clear();
      if (v->empty()) return;
      for (auto& item : split(*v, ',')) out.push_back(std::move(item));
    }
  }

  void pairs(const char* key, std::vector<std::pair<double, double>>& out) {
    if (auto v = raw(key)) {
      out.clear();
      if (v->empty()) return;
      for (const auto& item : split(*v, ',')) {
        const auto xy = split(item, ':');
        if (xy.size() != 2) fail(key, "expected 'energy:value' pairs, got '" + item + "'");
        out.emplace_back(parse_double(key, xy[0]), parse_double(key, xy[1]));
      }
    }
  }

  void finish() const {
    for (const auto& [key, child] : node_) {
      if (!used_.contains(key)) throw ConfigError("unknown key '" + key + "' in section [" + name_ + "]");
    }
  }

 private:
  std::optional<std::string> raw(const char* key) {
    used_.insert(key);
    const auto it = node_.find(key);
    if (it == node_.not_found()) return std::nullopt;
    return trim(it->second.data());
  }

  [[noreturn]] void fail(const char* key, const std::string& why) const {
    throw ConfigError("[" + name_ + "] " + key + ": " + why);
  }

  double parse_double(const char* key, const std::string& s) const {
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size() || s.empty()) fail(key, "not a number: '" + s + "'");
    return v;
  }

  std::uint64_t parse_u64(const char* key, const std::string& s) const {
    std::uint64_t v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec == std::errc() && r.ptr == s.data() + s.size() && !s.empty()) return v;
    // Accept integral values written in exponent form, e.g. 1e7.
    const double d = parse_double(key, s);
    if (d < 0.0 || d != std::floor(d) || d > 1.8e19) fail(key, "not a non-negative integer: '" + s + "'");
    return static_cast<std::uint64_t>(d);
  }

  std::string name_;
  const pt::ptree& node_;
  std::set<std::string> used_;
};

template <class Fn>
auto as_config_error(const std::string& context, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(context + ": " + e.what());
  }
}

}  // namespace

std::string_view to_string(ScanType type) {
  switch (type) {
    case ScanType::delay:
      return "delay";
    case ScanType::energy:
      return "energy";
    case ScanType::g2:
      return "g2";
  }
  return "unknown";
}

ScanType parse_scan_type(std::string_view text) {
  if (text == "delay") return ScanType::delay;
  if (text == "energy") return ScanType::energy;
  if (text == "g2") return ScanType::g2;
  throw ConfigError("unknown scan type '" + std::string(text) + "' (expected delay, energy or g2)");
}

ScenarioConfig parse_scenario(std::string_view text) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }

  ScenarioConfig c;
  for (const auto& [section, node] : tree) {
    if (node.empty() && !node.data().empty()) {
      throw ConfigError("key '" + section + "' appears outside any section");
    }
    SectionReader r(section, node);
    if (section.rfind("material.", 0) == 0) {
      const std::string name = section.substr(9);
      if (name.empty()) throw ConfigError("material section needs a name, e.g. [material.fused_silica]");
      ScenarioConfig::Material m;
      std::vector<double> range;
      r.numbers("B", m.b);
      r.numbers("C_um2", m.c_um2);
      r.numbers("range_um", range);
      if (range.size() != 2) throw ConfigError("[" + section + "] range_um needs exactly two values");
      m.min_um = range[0];
      m.max_um = range[1];
      c.materials[name] = std::move(m);
    } else if (section == "fiber") {
      r.text("material", c.fiber.material);
      r.number("length_m", c.fiber.length_m);
      r.number("n2_m2_per_W", c.fiber.n2_m2_per_W);
      r.number("mode_field_diameter_um", c.fiber.mode_field_diameter_um);
      r.optional_number("effective_area_um2", c.fiber.effective_area_um2);
    } else if (section == "pump") {
      r.number("wavelength_nm", c.pump.wavelength_nm);
      r.number("fwhm_fs", c.pump.fwhm_fs);
      r.number("energy_nJ", c.pump.energy_nJ);
      r.text("shape", c.pump.shape);
      r.number("polarization_deg", c.pump.polarization_deg);
    } else if (section == "signal") {
      r.number("wavelength_nm", c.signal.wavelength_nm);
      r.text("profile", c.signal.profile);
      r.number("gaussian_fwhm_fs", c.signal.gaussian_fwhm_fs);
      r.number("rect_width_fs", c.signal.rect_width_fs);
    } else if (section == "shutter") {
      r.number("theta_deg", c.shutter.theta_deg);
      r.number_or_auto("calibration", c.shutter.calibration);
      r.number("calibration_phase_rad", c.shutter.calibration_phase_rad);
      r.number("calibration_energy_nJ", c.shutter.calibration_energy_nJ);
      r.number("imperfection", c.shutter.imperfection);
      r.number("rel_tol", c.shutter.rel_tol);
    } else if (section == "source") {
      r.number_or_auto("mean_pairs", c.source.mean_pairs);
      r.number("target_g2", c.source.target_g2);
      r.text("pair_statistics", c.source.pair_statistics);
      r.number("idler_efficiency", c.source.idler_efficiency);
      r.number("signal_transmission", c.source.signal_transmission);
      r.number("dark_count_prob", c.source.dark_count_prob);
      r.number("analyzer_extinction", c.source.analyzer_extinction);
      r.text("noise_statistics", c.source.noise_statistics);
      r.count("noise_modes", c.source.noise_modes);
    } else if (section == "noise") {
      r.text("model", c.noise.model);
      r.number("reference_per_pulse", c.noise.reference_per_pulse);
      r.number("reference_energy_nJ", c.noise.reference_energy_nJ);
      r.number("exponent", c.noise.exponent);
      r.pairs("table_nJ", c.noise.table_nJ);
    } else if (section == "scan") {
      std::string type(to_string(c.scan.type));
      r.text("type", type);
      c.scan.type = parse_scan_type(type);
      r.number("delay_min_ps", c.scan.delay_min_ps);
      r.number("delay_max_ps", c.scan.delay_max_ps);
      r.count("steps", c.scan.steps);
      r.number("energy_min_nJ", c.scan.energy_min_nJ);
      r.number("energy_max_nJ", c.scan.energy_max_nJ);
      r.number("delay_ps", c.scan.delay_ps);
      r.count("pulses", c.scan.pulses);
      r.optional_count("seed", c.scan.seed);
    } else if (section == "output") {
      r.text("directory", c.output.directory);
      r.words("formats", c.output.formats);
    } else {
      throw ConfigError("unknown section [" + section + "]");
    }
    r.finish();
  }
  return c;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_scenario(ss.str());
}

std::string serialize_scenario(const ScenarioConfig& c) {
  std::ostringstream o;
  const auto num = [](double v) { return format_double(v); };
  const auto list = [&](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
    return s;
  };
  const auto opt = [&](const std::optional<double>& v, const char* empty) { return v ? num(*v) : std::string(empty); };

  for (const auto& [name, m] : c.materials) {
    o << "[material." << name << "]\n";
    o << "B = " << list(m.b) << "\n";
    o << "C_um2 = " << list(m.c_um2) << "\n";
    o << "range_um = " << num(m.min_um) << ", " << num(m.max_um) << "\n\n";
  }
  o << "[fiber]\n"
    << "material = " << c.fiber.material << "\n"
    << "length_m = " << num(c.fiber.length_m) << "\n"
    << "n2_m2_per_W = " << num(c.fiber.n2_m2_per_W) << "\n"
    << "mode_field_diameter_um = " << num(c.fiber.mode_field_diameter_um) << "\n"
    << "effective_area_um2 = " << opt(c.fiber.effective_area_um2, "none") << "\n\n";
  o << "[pump]\n"
    << "wavelength_nm = " << num(c.pump.wavelength_nm) << "\n"
    << "fwhm_fs = " << num(c.pump.fwhm_fs) << "\n"
    << "energy_nJ = " << num(c.pump.energy_nJ) << "\n"
    << "shape = " << c.pump.shape << "\n"
    << "polarization_deg = " << num(c.pump.polarization_deg) << "\n\n";
  o << "[signal]\n"
    << "wavelength_nm = " << num(c.signal.wavelength_nm) << "\n"
    << "profile = " << c.signal.profile << "\n"
    << "gaussian_fwhm_fs = " << num(c.signal.gaussian_fwhm_fs) << "\n"
    << "rect_width_fs = " << num(c.signal.rect_width_fs) << "\n\n";
  o << "[shutter]\n"
    << "theta_deg = " << num(c.shutter.theta_deg) << "\n"
    << "calibration = " << opt(c.shutter.calibration, "auto") << "\n"
    << "calibration_phase_rad = " << num(c.shutter.calibration_phase_rad) << "\n"
    << "calibration_energy_nJ = " << num(c.shutter.calibration_energy_nJ) << "\n"
    << "imperfection = " << num(c.shutter.imperfection) << "\n"
    << "rel_tol = " << num(c.shutter.rel_tol) << "\n\n";
  o << "[source]\n"
    << "mean_pairs = " << opt(c.source.mean_pairs, "auto") << "\n"
    << "target_g2 = " << num(c.source.target_g2) << "\n"
    << "pair_statistics = " << c.source.pair_statistics << "\n"
    << "idler_efficiency = " << num(c.source.idler_efficiency) << "\n"
    << "signal_transmission = " << num(c.source.signal_transmission) << "\n"
    << "dark_count_prob = " << num(c.source.dark_count_prob) << "\n"
    << "analyzer_extinction = " << num(c.source.analyzer_extinction) << "\n"
    << "noise_statistics = " << c.source.noise_statistics << "\n"
    << "noise_modes = " << c.source.noise_modes << "\n\n";
  o << "[noise]\n"
    << "model = " << c.noise.model << "\n"
    << "reference_per_pulse = " << num(c.noise.reference_per_pulse) << "\n"
    << "reference_energy_nJ = " << num(c.noise.reference_energy_nJ) << "\n"
    << "exponent = " << num(c.noise.exponent) << "\n"
    << "table_nJ = ";
  for (std::size_t i = 0; i < c.noise.table_nJ.size(); ++i) {
    o << (i ? ", " : "") << num(c.noise.table_nJ[i].first) << ":" << num(c.noise.table_nJ[i].second);
  }
  o << "\n\n";
  o << "[scan]\n"
    << "type = " << to_string(c.scan.type) << "\n"
    << "delay_min_ps = " << num(c.scan.delay_min_ps) << "\n"
    << "delay_max_ps = " << num(c.scan.delay_max_ps) << "\n"
    << "steps = " << c.scan.steps << "\n"
    << "energy_min_nJ = " << num(c.scan.energy_min_nJ) << "\n"
    << "energy_max_nJ = " << num(c.scan.energy_max_nJ) << "\n"
    << "delay_ps = " << num(c.scan.delay_ps) << "\n"
    << "pulses = " << c.scan.pulses << "\n"
    << "seed = " << (c.scan.seed ? std::to_string(*c.scan.seed) : std::string("none")) << "\n\n";
  o << "[output]\n"
    << "directory = " << c.output.directory << "\n"
    << "formats = ";
  for (std::size_t i = 0; i < c.output.formats.size(); ++i) o << (i ? ", " : "") << c.output.formats[i];
  o << "\n";
  return o.str();
}

optics::SellmeierCoefficients resolve_material(const ScenarioConfig& config, const std::string& name) {
  const auto it = config.materials.find(name);
  if (it == config.materials.end()) {
    if (name == "fused_silica") return optics::SellmeierCoefficients::fused_silica();
    throw ConfigError("material '" + name + "' is not defined");
  }
  const auto& m = it->second;
  if (m.b.size() != m.c_um2.size()) {
    throw ConfigError("material '" + name + "': B and C_um2 need the same number of entries");
  }
  std::vector<optics::SellmeierTerm> terms;
  for (std::size_t i = 0; i < m.b.size(); ++i) terms.push_back({m.b[i], m.c_um2[i]});
  return as_config_error("material '" + name + "'",
                         [&] { return optics::SellmeierCoefficients(name, std::move(terms), m.min_um, m.max_um); });
}

namespace {

shutter::ShutterConfig shutter_without_calibration(const ScenarioConfig& c) {
  return as_config_error("shutter configuration", [&] {
    shutter::ShutterConfig s;
    s.fiber.material = resolve_material(c, c.fiber.material);
    s.fiber.length_m = c.fiber.length_m;
    s.fiber.n2_m2_per_w = c.fiber.n2_m2_per_W;
    s.fiber.effective_area_m2 =
        c.fiber.effective_area_um2
            ? *c.fiber.effective_area_um2 * units::um * units::um
            : shutter::FiberSpec::area_from_mode_field_diameter(c.fiber.mode_field_diameter_um * units::um);
    s.pump.center_wavelength_m = c.pump.wavelength_nm * units::nm;
    s.pump.fwhm_s = c.pump.fwhm_fs * units::fs;
    s.pump.energy_j = c.pump.energy_nJ * units::nJ;
    s.pump.shape = optics::parse_pulse_shape(c.pump.shape);
    s.pump.polarization_rad = units::deg_to_rad(c.pump.polarization_deg);
    s.signal_wavelength_m = c.signal.wavelength_nm * units::nm;
    s.signal_profile.kind = shutter::parse_signal_profile_kind(c.signal.profile);
    s.signal_profile.gaussian_fwhm_s = c.signal.gaussian_fwhm_fs * units::fs;
    s.signal_profile.rect_width_s = c.signal.rect_width_fs * units::fs;
    s.theta_rad = units::deg_to_rad(c.shutter.theta_deg);
    s.calibration = c.shutter.calibration;
    s.imperfection = c.shutter.imperfection;
    s.quadrature.rel_tol = c.shutter.rel_tol;
    s.validate();
    // Both wavelengths must be inside the material window.
    (void)s.walkoff_s_per_m();
    return s;
  });
}

}  // namespace

void validate_scenario(const ScenarioConfig& c) {
  for (const auto& [name, m] : c.materials) (void)resolve_material(c, name);
  (void)shutter_without_calibration(c);
  (void)as_config_error("source configuration", [&] {
    stats::SourceModel m;
    m.pair_statistics = stats::parse_pair_statistics(c.source.pair_statistics);
    m.noise_statistics = stats::parse_noise_statistics(c.source.noise_statistics);
    m.mean_pairs = c.source.mean_pairs.value_or(0.0);
    m.idler_efficiency = c.source.idler_efficiency;
    m.signal_transmission = c.source.signal_transmission;
    m.dark_count_prob = c.source.dark_count_prob;
    m.analyzer_extinction = c.source.analyzer_extinction;
    m.noise_modes = c.source.noise_modes;
    m.validate();
    build_noise_model(c).validate();
    return 0;
  });
  if (!c.source.mean_pairs && !(c.source.target_g2 > 0.0)) {
    throw ConfigError("[source] target_g2 must be positive when mean_pairs = auto");
  }
  if (!(c.shutter.calibration_energy_nJ > 0.0) || !(c.shutter.calibration_phase_rad > 0.0)) {
    throw ConfigError("[shutter] calibration reference energy and phase must be positive");
  }
  if (c.noise.model == "table" && c.noise.table_nJ.empty()) {
    throw ConfigError("[noise] model = table needs a non-empty table_nJ");
  }
  if (c.scan.steps < 1) throw ConfigError("[scan] steps must be at least 1");
  if (c.scan.type == ScanType::delay) {
    if (c.scan.steps > 1 && !(c.scan.delay_max_ps > c.scan.delay_min_ps)) {
      throw ConfigError("[scan] delay_max_ps must exceed delay_min_ps");
    }
  } else {
    if (c.scan.energy_min_nJ < 0.0) throw ConfigError("[scan] energy_min_nJ must be non-negative");
    if (c.scan.steps > 1 && !(c.scan.energy_max_nJ > c.scan.energy_min_nJ)) {
      throw ConfigError("[scan] energy_max_nJ must exceed energy_min_nJ");
    }
  }
  if (c.scan.type == ScanType::g2) {
    if (c.scan.pulses < 1) throw ConfigError("[scan] pulses must be at least 1 for a g2 scan");
    if (!c.scan.seed) throw ConfigError("[scan] a seed is required for a g2 scan");
  }
  for (const auto& f : c.output.formats) {
    if (f != "csv") throw ConfigError("[output] unsupported format '" + f + "' (only csv)");
  }
  if (c.output.directory.empty()) throw ConfigError("[output] directory must not be empty");
}

shutter::ShutterConfig build_shutter_config(const ScenarioConfig& c) {
  shutter::ShutterConfig s = shutter_without_calibration(c);
  if (!s.calibration) {
    s = as_config_error("shutter calibration", [&] {
      return shutter::calibrated(s, c.shutter.calibration_phase_rad, c.shutter.calibration_energy_nJ * units::nJ, 0.0);
    });
  }
  return s;
}

stats::NoiseModel build_noise_model(const ScenarioConfig& c) {
  return as_config_error("noise model", [&] {
    stats::NoiseModel n;
    n.kind = stats::parse_noise_model_kind(c.noise.model);
    n.reference_mean = c.noise.reference_per_pulse;
    n.reference_energy_j = c.noise.reference_energy_nJ * units::nJ;
    n.exponent = c.noise.exponent;
    for (const auto& [e, v] : c.noise.table_nJ) n.table.emplace_back(e * units::nJ, v);
    return n;
  });
}

stats::SourceModel build_source_model(const ScenarioConfig& c) {
  return as_config_error("source model", [&] {
    stats::SourceModel m;
    m.pair_statistics = stats::parse_pair_statistics(c.source.pair_statistics);
    m.noise_statistics = stats::parse_noise_statistics(c.source.noise_statistics);
    m.idler_efficiency = c.source.idler_efficiency;
    m.signal_transmission = c.source.signal_transmission;
    m.dark_count_prob = c.source.dark_count_prob;
    m.analyzer_extinction = c.source.analyzer_extinction;
    m.noise_modes = c.source.noise_modes;
    m.switch_efficiency = 1.0;
    m.noise_mean = 0.0;
    m.mean_pairs = c.source.mean_pairs ? *c.source.mean_pairs : stats::calibrate_mean_pairs(m, c.source.target_g2);
    m.validate();
    return m;
  });
}

std::vector<double> scan_grid(const ScenarioConfig& c) {
  const auto n = static_cast<std::size_t>(c.scan.steps);
  std::vector<double> grid = c.scan.type == ScanType::delay
                                 ? shutter::linspace(c.scan.delay_min_ps, c.scan.delay_max_ps, n)
                                 : shutter::linspace(c.scan.energy_min_nJ, c.scan.energy_max_nJ, n);
  const double unit = c.scan.type == ScanType::delay ? units::ps : units::nJ;
  for (auto& x : grid) x *= unit;
  return grid;
}

}  // namespace kerrsim::runner
