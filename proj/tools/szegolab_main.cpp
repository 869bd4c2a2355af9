// Command-line front end: deterministic, configuration-driven runs of the
// Boshernitzan diagnostics, Lyapunov scans, spectrum estimation, rotation
// classification, and CMV eigensolves.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "szegolab/commands.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<int> grid;
  std::optional<std::int64_t> steps;
  std::optional<int> samples;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON run configuration")->required();
  cmd->add_option("--out", args.out_dir, "output directory (default: .)");
  cmd->add_option("--grid", args.grid, "override grid size");
  cmd->add_option("--steps", args.steps, "override cocycle step count");
  cmd->add_option("--samples", args.samples, "override sample count");
}

int run(const CommonArgs& args, int (*command)(const szegolab::RunConfig&, const std::string&)) {
  try {
    szegolab::RunConfig config = szegolab::load_config(args.config_path);
    szegolab::apply_overrides(config, {args.grid, args.steps, args.samples});
    return command(config, args.out_dir);
  } catch (const szegolab::ConfigError& e) {
    std::cerr << "szegolab: config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "szegolab: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"szegolab: Verblunsky coefficient sequences, Szego cocycles, and CMV spectra"};
  app.require_subcommand(1);

  CommonArgs bosh_args, lyap_args, spec_args, beta_args, cmv_args;
  add_common(app.add_subcommand("bosh", "minimal scaled cylinder frequencies"), bosh_args);
  add_common(app.add_subcommand("lyapunov", "Lyapunov exponents on a phase grid"), lyap_args);
  add_common(app.add_subcommand("spectrum", "spectrum scan with measure estimate"), spec_args);
  add_common(app.add_subcommand("classify-beta", "rotation partition-point classification"),
             beta_args);
  add_common(app.add_subcommand("cmv-eig", "eigenphases of a CMV truncation"), cmv_args);

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("bosh")) return run(bosh_args, szegolab::cmd_bosh);
  if (app.got_subcommand("lyapunov")) return run(lyap_args, szegolab::cmd_lyapunov);
  if (app.got_subcommand("spectrum")) return run(spec_args, szegolab::cmd_spectrum);
  if (app.got_subcommand("classify-beta")) return run(beta_args, szegolab::cmd_classify_beta);
  if (app.got_subcommand("cmv-eig")) return run(cmv_args, szegolab::cmd_cmv_eig);
  return 1;
}
