#include "kerrsim/runner/runs.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "kerrsim/error.hpp"
#include "kerrsim/runner/csv.hpp"
#include "kerrsim/shutter/response.hpp"
#include "kerrsim/stats/g2_scan.hpp"
#include "kerrsim/units.hpp"

namespace kerrsim::runner {

namespace {

void require_type(const ScenarioConfig& c, ScanType expected) {
  if (c.scan.type != expected) {
    throw ConfigError("[scan] type is '" + std::string(to_string(c.scan.type)) + "' but this command runs a '" +
                      std::string(to_string(expected)) + "' scan");
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw Error("failed writing " + path.string());
}

// Collects outputs for one run directory and writes the manifest last.
class RunWriter {
 public:
  RunWriter(const ScenarioConfig& config, const RunOptions& options, std::string scan_type)
      : directory_(options.out_dir ? *options.out_dir : std::filesystem::path(config.output.directory)),
        config_text_(serialize_scenario(config)) {
    manifest_.command = options.command_line;
    manifest_.scan_type = std::move(scan_type);
    manifest_.code_version = code_version();
    manifest_.config_text = config_text_;
    manifest_.started_utc = utc_timestamp();
  }

  void open() {
    std::error_code ec;
    std::filesystem::create_directories(directory_, ec);
    if (ec) throw Error("cannot create output directory " + directory_.string() + ": " + ec.message());
  }

  void table(const std::string& name, const CsvTable& t, const std::map<std::string, double>& values) {
    t.write(directory_ / name);
    manifest_.outputs.push_back({name, t.rows.size()});
    const std::string meta = name.substr(0, name.rfind('.')) + ".meta.json";
    write_text(directory_ / meta, sidecar_metadata(name, config_text_, values));
    manifest_.outputs.push_back({meta, std::nullopt});
  }

  RunManifest& manifest() { return manifest_; }

  RunReport finish(ExitCode status) {
    manifest_.exit_code = static_cast<int>(status);
    manifest_.finished_utc = utc_timestamp();
    write_text(directory_ / "manifest.json", manifest_.to_json());
    return {status, directory_, manifest_};
  }

 private:
  std::filesystem::path directory_;
  std::string config_text_;
  RunManifest manifest_;
};

}  // namespace

ScenarioConfig effective_config(ScenarioConfig config, const RunOptions& options) {
  if (options.seed) config.scan.seed = options.seed;
  if (options.out_dir) config.output.directory = options.out_dir->string();
  validate_scenario(config);
  return config;
}

RunReport run_delay_scan(const ScenarioConfig& input, const RunOptions& options) {
  const ScenarioConfig config = effective_config(input, options);
  require_type(config, ScanType::delay);
  const shutter::ShutterConfig shutter = build_shutter_config(config);
  const std::vector<double> delays = scan_grid(config);

  const shutter::ResponseCurve total = shutter::total_response(shutter, delays, options.threads);
  const shutter::ResponseCurve intrinsic = shutter::intrinsic_response(shutter, delays, options.threads);

  RunWriter out(config, options, "delay");
  auto& diag = out.manifest().diagnostics;
  diag["calibration"] = shutter.calibration.value_or(1.0);
  diag["walkoff_ps"] = std::abs(shutter.walkoff_s_per_m()) * shutter.fiber.length_m / units::ps;
  diag["peak_efficiency"] = *std::max_element(total.efficiency.begin(), total.efficiency.end());
  diag["rel_tol"] = shutter.quadrature.rel_tol;
  diag["quadrature_evaluations"] = static_cast<double>(total.diagnostics.evaluations + intrinsic.diagnostics.evaluations);
  diag["worst_error"] = std::max(total.diagnostics.worst_error, intrinsic.diagnostics.worst_error);
  for (const auto& [key, curve] : {std::pair{"fwhm_ps", &total}, std::pair{"intrinsic_fwhm_ps", &intrinsic}}) {
    try {
      diag[key] = shutter::fwhm(*curve) / units::ps;
    } catch (const ShapeError& e) {
      out.manifest().notes[key] = e.what();
    }
  }

  const std::map<std::string, double> values{{"rel_tol", shutter.quadrature.rel_tol},
                                             {"calibration", diag["calibration"]},
                                             {"walkoff_ps", diag["walkoff_ps"]}};
  out.open();
  out.table("delay_scan.csv", to_csv(total), values);
  out.table("delay_scan_intrinsic.csv", to_csv(intrinsic), values);
  return out.finish(ExitCode::ok);
}

RunReport run_energy_scan(const ScenarioConfig& input, const RunOptions& options) {
  const ScenarioConfig config = effective_config(input, options);
  require_type(config, ScanType::energy);
  const shutter::ShutterConfig shutter = build_shutter_config(config);
  const stats::NoiseModel noise = build_noise_model(config);
  const std::vector<double> energies = scan_grid(config);

  const shutter::EnergyScan scan =
      shutter::energy_scan(shutter, energies, config.scan.delay_ps * units::ps, options.threads);

  CsvTable t = to_csv(scan);
  t.header.push_back("noise_per_pulse");
  for (std::size_t i = 0; i < t.rows.size(); ++i) t.rows[i].push_back(format_number(noise.mean_at(energies[i])));

  RunWriter out(config, options, "energy");
  auto& diag = out.manifest().diagnostics;
  diag["calibration"] = shutter.calibration.value_or(1.0);
  diag["kappa_rad_per_nJ"] = scan.kappa_rad_per_j * units::nJ;
  diag["rel_tol"] = shutter.quadrature.rel_tol;

  out.open();
  out.table("energy_scan.csv", t,
            {{"kappa_rad_per_nJ", diag["kappa_rad_per_nJ"]},
             {"calibration", diag["calibration"]},
             {"rel_tol", shutter.quadrature.rel_tol},
             {"delay_ps", config.scan.delay_ps}});
  return out.finish(ExitCode::ok);
}

RunReport run_g2_scan(const ScenarioConfig& input, const RunOptions& options) {
  const ScenarioConfig config = effective_config(input, options);
  require_type(config, ScanType::g2);
  const shutter::ShutterConfig shutter = build_shutter_config(config);

  stats::G2ScanSettings settings;
  settings.input_model = build_source_model(config);
  settings.noise = build_noise_model(config);
  settings.energies_j = scan_grid(config);
  settings.delay_s = config.scan.delay_ps * units::ps;
  settings.pulses = config.scan.pulses;
  settings.seed = *config.scan.seed;
  settings.threads = options.threads;

  const stats::G2Scan scan = stats::g2_vs_energy_curve(settings, shutter);

  CsvTable t;
  t.header = {"energy_nJ",     "switch_efficiency", "noise_per_pulse", "g2",          "g2_err",
              "g2_model",      "g2_input",          "pulses",          "idler_clicks", "signal1_clicks",
              "signal2_clicks", "two_fold_1i",      "two_fold_2i",     "three_fold_12i", "seed",
              "model_hash",    "flag"};
  bool flagged = false;
  for (const auto& p : scan.points) {
    const auto& c = p.counts;
    const bool ok = p.measured.has_value();
    flagged |= !ok;
    t.rows.push_back({format_number(p.energy_j / units::nJ), format_number(p.switch_efficiency),
                      format_number(p.noise_mean), ok ? format_number(p.measured->value) : "nan",
                      ok ? format_number(p.measured->std_error) : "nan", format_number(p.g2_model),
                      format_number(scan.g2_input), std::to_string(c.pulses), std::to_string(c.idler_clicks),
                      std::to_string(c.signal1_clicks), std::to_string(c.signal2_clicks),
                      std::to_string(c.two_fold_1i), std::to_string(c.two_fold_2i),
                      std::to_string(c.three_fold_12i), std::to_string(p.seed), p.model.hash(),
                      ok ? "ok" : "insufficient_statistics"});
  }

  RunWriter out(config, options, "g2");
  auto& diag = out.manifest().diagnostics;
  diag["mean_pairs"] = settings.input_model.mean_pairs;
  diag["g2_input"] = scan.g2_input;
  diag["g2_noise"] = scan.g2_noise;
  diag["calibration"] = shutter.calibration.value_or(1.0);
  if (flagged) out.manifest().notes["flag"] = "one or more rows lacked two-fold coincidences";

  out.open();
  out.table("g2_scan.csv", t,
            {{"mean_pairs", settings.input_model.mean_pairs},
             {"g2_input", scan.g2_input},
             {"g2_noise", scan.g2_noise},
             {"pulses_per_point", static_cast<double>(settings.pulses)}});
  return out.finish(flagged ? ExitCode::insufficient_statistics : ExitCode::ok);
}

}  // namespace kerrsim::runner
