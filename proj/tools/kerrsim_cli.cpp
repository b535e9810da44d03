// kerrsim: command-line front end for delay, energy and g2 scans of a fiber
// Kerr shutter acting on heralded single photons.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kerrsim/error.hpp"
#include "kerrsim/runner/runs.hpp"
#include "kerrsim/runner/scenario.hpp"

namespace {

using kerrsim::runner::ExitCode;

struct CommonArgs {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_outputs) {
  cmd->add_option("--config", args.config, "Scenario INI file")->required()->check(CLI::ExistingFile);
  if (!with_outputs) return;
  cmd->add_option("--out", args.out, "Output directory (overrides [output] directory)");
  cmd->add_option("--seed", args.seed, "Monte Carlo seed (overrides [scan] seed)");
  cmd->add_option("--threads", args.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
}

int report(const kerrsim::runner::RunReport& r) {
  std::cout << "wrote " << r.manifest.outputs.size() << " files to " << r.directory.string() << "\n";
  for (const auto& [k, v] : r.manifest.diagnostics) std::cout << "  " << k << " = " << v << "\n";
  for (const auto& [k, v] : r.manifest.notes) std::cout << "  note " << k << ": " << v << "\n";
  return static_cast<int>(r.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiber Kerr shutter simulator for heralded single photons"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kerrsim::runner::code_version());

  CommonArgs args;
  auto* delay = app.add_subcommand("delay-scan", "Switching efficiency against pump delay");
  auto* energy = app.add_subcommand("energy-scan", "Switching efficiency and noise against pump energy");
  auto* g2 = app.add_subcommand("g2-scan", "Monte Carlo heralded g2 against pump energy");
  auto* validate = app.add_subcommand("validate", "Check a scenario file without running it");
  for (auto* cmd : {delay, energy, g2}) add_common(cmd, args, true);
  add_common(validate, args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  std::string command_line;
  for (int i = 0; i < argc; ++i) command_line += (i ? " " : "") + std::string(argv[i]);

  kerrsim::runner::RunOptions options;
  if (!args.out.empty()) options.out_dir = args.out;
  options.seed = args.seed;
  options.threads = args.threads;
  options.command_line = command_line;

  try {
    const auto config = kerrsim::runner::load_scenario(args.config);
    if (*validate) {
      const auto effective = kerrsim::runner::effective_config(config, options);
      (void)kerrsim::runner::build_shutter_config(effective);
      (void)kerrsim::runner::build_source_model(effective);
      std::cout << args.config << ": ok (" << kerrsim::runner::to_string(effective.scan.type) << " scan)\n";
      return static_cast<int>(ExitCode::ok);
    }
    if (*delay) return report(kerrsim::runner::run_delay_scan(config, options));
    if (*energy) return report(kerrsim::runner::run_energy_scan(config, options));
    return report(kerrsim::runner::run_g2_scan(config, options));
  } catch (const kerrsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::config);
  } catch (const kerrsim::ConvergenceError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::numerical);
  } catch (const kerrsim::InsufficientStatistics& e) {
    std::cerr << "insufficient statistics: " << e.what() << "\n";
    return static_cast<int>(ExitCode::insufficient_statistics);
  } catch (const kerrsim::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::config);
  } catch (const kerrsim::RangeError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::io);
  }
}
