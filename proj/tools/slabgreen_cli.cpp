// slabgreen: coefficients, Green-identity checks, decay-rate scans and the
// free-space tensor baseline, written as CSV.
//
// Exit status: 0 success, 1 invalid input, 2 numerical tolerance violation,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "slabgreen/cli/commands.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kNumerical = 2, kIo = 3 };

using slabgreen::cli::CommandOptions;
using slabgreen::cli::CommandResult;
using slabgreen::cli::RunConfig;

}  // namespace

int main(int argc, char** argv) {
  namespace sc = slabgreen::cli;

  CLI::App app{"Green function, boundary term and decay rates of a lossy 1D slab"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  double tol = 1e-8;
  bool oracle = false;
  std::string units;
  std::string sweep = "position";

  const std::map<std::string, std::string> descriptions = {
      {"coefficients", "Slab coefficients A, B, C, D, Y and power balance per frequency"},
      {"verify-identity", "Quadrature vs closed form of the Green identity with boundary term"},
      {"decay-scan", "Corrected and uncorrected decay rates along a position/thickness/frequency sweep"},
      {"limit-study", "Diagnostics along a permittivity path approaching vacuum"},
      {"tensor3d", "Free-space dyadic Green tensor and vacuum decay rate"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, text] : descriptions) {
    auto* sub = app.add_subcommand(name, text);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_path, "CSV output path (default: config output.path, else stdout)");
    sub->add_option("--tol", tol, "Quadrature / identity tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--oracle", oracle, "Add quadrature cross-check columns");
    sub->add_option("--units", units, "Unit system")->check(CLI::IsMember({"natural", "si"}));
    if (name == "decay-scan") {
      sub->add_option("--sweep", sweep, "Swept axis")
          ->check(CLI::IsMember({"position", "thickness", "frequency"}));
    }
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  std::string command;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }

  CommandResult result;
  RunConfig config;
  try {
    std::optional<sc::UnitSystem> unit_override;
    if (units == "si") unit_override = sc::UnitSystem::si;
    if (units == "natural") unit_override = sc::UnitSystem::natural;
    config = sc::load_config(config_path, unit_override);

    CommandOptions options;
    options.tol = subs[command]->count("--tol") ? tol : config.quadrature_tol;
    options.oracle = oracle;
    options.sweep = sweep == "thickness"   ? sc::SweepKind::thickness
                    : sweep == "frequency" ? sc::SweepKind::frequency
                                           : sc::SweepKind::position;

    if (command == "coefficients") result = sc::cmd_coefficients(config, options);
    if (command == "verify-identity") result = sc::cmd_verify_identity(config, options);
    if (command == "decay-scan") result = sc::cmd_decay_scan(config, options);
    if (command == "limit-study") result = sc::cmd_limit_study(config, options);
    if (command == "tensor3d") result = sc::cmd_tensor3d(config, options);
  } catch (const sc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const slabgreen::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }

  if (out_path.empty() && config.output_path) out_path = *config.output_path;
  if (out_path.empty()) {
    sc::write_csv(std::cout, result.table);
    std::cout.flush();
    if (!std::cout) return kIo;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kIo;
    }
    sc::write_csv(out, result.table);
    if (!out.flush()) {
      std::cerr << "error: failed writing '" << out_path << "'\n";
      return kIo;
    }
  }
  std::cerr << result.summary << '\n';
  return result.numerical_failure ? kNumerical : kOk;
}
