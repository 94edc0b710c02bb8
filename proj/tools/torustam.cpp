#include "torustam/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical checks of Tamagawa number identities for algebraic tori over Q"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "run one family of identity checks");

  torustam::RunConfig flags;
  std::string command, config_path;
  verify->add_option("command", command, "euler | lifting | globalinv | density | sha | tnc | all")
      ->required()
      ->check(CLI::IsMember(torustam::known_commands()));
  auto* o_torus = verify->add_option("--torus", flags.tori, "family:d or family:d1,d2 (repeatable)");
  auto* o_pmax = verify->add_option("--pmax", flags.pmax, "prime bound for Euler-factor checks");
  auto* o_kmax = verify->add_option("--kmax", flags.kmax, "lifting depth");
  auto* o_tol = verify->add_option("--tol", flags.tol, "tolerance for real-valued identities");
  auto* o_budget = verify->add_option("--budget", flags.budget, "enumeration budget (default: $TORUSTAM_BUDGET)");
  auto* o_jobs = verify->add_option("--jobs", flags.jobs, "worker threads");
  auto* o_out = verify->add_option("--out", flags.out, "report path (default: stdout)");
  auto* o_tim = verify->add_flag("--timings", flags.timings, "include wall-clock seconds per report");
  verify->add_option("--config", config_path, "JSON config file; flags take precedence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : torustam::kExitConfig;
  }

  torustam::RunConfig cfg;
  if (!config_path.empty()) {
    try {
      torustam::apply_config_file(cfg, config_path);
    } catch (const torustam::ConfigError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return torustam::kExitConfig;
    }
  }
  cfg.command = command;
  if (o_torus->count()) cfg.tori = flags.tori;
  if (o_pmax->count()) cfg.pmax = flags.pmax;
  if (o_kmax->count()) cfg.kmax = flags.kmax;
  if (o_tol->count()) cfg.tol = flags.tol;
  if (o_budget->count()) cfg.budget = flags.budget;
  if (o_jobs->count()) cfg.jobs = flags.jobs;
  if (o_out->count()) cfg.out = flags.out;
  if (o_tim->count()) cfg.timings = true;

  try {
    return torustam::run(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
