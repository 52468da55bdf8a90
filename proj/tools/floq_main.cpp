#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/scenario.hpp"
#include "cli/verify.hpp"
#include "floq/errors.hpp"

namespace {

// exit codes: 0 success, 1 invariant failure, 2 config error, 3 capacity error
constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kConfigError = 2;
constexpr int kCapacityError = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"floq: quasienergy spectra of pulse-driven qubits and modulated qubit chains"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  int threads = 1;
  double tol = -1.0;
  std::vector<std::uint64_t> seeds;

  auto* run = app.add_subcommand("run", "run a scenario config and emit CSV + JSON report");
  run->add_option("config", config_path, "scenario config file")->required();
  run->add_option("--out", out_dir, "output directory (default: current)");
  run->add_option("--threads", threads, "worker threads for sweeps");
  run->add_option("--tol", tol, "override the scenario's default check tolerance");
  run->add_option("--seed", seeds, "seed list override for ensemble scenarios");

  auto* verify = app.add_subcommand("verify", "run the cross-oracle verification suite");
  verify->add_option("--tol", tol, "override the per-check tolerances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfigError;
  }

  try {
    if (run->parsed()) {
      const auto cfg = floq::cli::load_config_file(config_path);
      floq::cli::RunOptions opts;
      opts.out_dir = out_dir;
      opts.threads = threads;
      opts.tol = tol;
      opts.seeds = seeds;
      const auto rep = floq::cli::run_scenario(cfg, opts);
      for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (worst residual "
                  << c.worst << (c.note.empty() ? "" : "; " + c.note) << ")\n";
      }
      std::cout << rep.scenario << ": " << rep.points << " points -> " << rep.csv_path << " in "
                << rep.wall_ms << " ms\n";
      return rep.all_passed() ? kOk : kInvariantFailure;
    }
    if (verify->parsed()) {
      return floq::cli::verify_all(std::cout, tol) == 0 ? kOk : kInvariantFailure;
    }
  } catch (const floq::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const floq::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kCapacityError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariantFailure;
  }
  return kConfigError;
}
