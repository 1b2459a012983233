// Batch experiment runner: reproduces the library's reference data sets as
// CSV files. Each experiment is a subcommand; parameters come from a TOML
// or JSON config file, with command-line flags overriding file values.
// Exit codes: 0 ok, 1 config error, 2 runtime error.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinchain/experiments.hpp"

namespace {

struct Flags {
  std::string config_path, preset, out_dir;
  std::uint64_t seed = 0;
  int threads = 0;
  bool seed_set = false, out_set = false, threads_set = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "TOML or JSON experiment config");
  auto* out = cmd->add_option("--out", f.out_dir, "output directory");
  auto* seed = cmd->add_option("--seed", f.seed, "random seed (overrides config)");
  auto* thr = cmd->add_option("--threads", f.threads, "worker threads (0 = auto)");
  cmd->callback([cmd, out, seed, thr, &f] {
    f.out_set = out->count() > 0;
    f.seed_set = seed->count() > 0;
    f.threads_set = thr->count() > 0;
    (void)cmd;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinchain - qubit + XX-chain open-system dynamics runner"};
  app.require_subcommand(0, 1);

  Flags flags;
  std::string chosen;
  const std::vector<std::string> experiments = {
      "coeffs",   "measure-sweep", "flux",    "divisibility", "qpt",
      "spectrum", "excitations",   "gad-fit", "fixed-point"};
  for (const auto& name : experiments) {
    auto* cmd = app.add_subcommand(name, "run the " + name + " experiment");
    add_common(cmd, flags);
    cmd->parse_complete_callback([&chosen, name] { chosen = name; });
  }
  auto* run = app.add_subcommand("run", "run the experiment named in the config");
  add_common(run, flags);
  run->parse_complete_callback([&chosen] { chosen = "run"; });
  app.add_option("--preset", flags.preset,
                 "built-in figure preset (fig1..fig8), no subcommand needed");
  auto* top_out = app.add_option("--out", flags.out_dir, "output directory");
  auto* top_seed = app.add_option("--seed", flags.seed, "random seed");
  auto* top_thr = app.add_option("--threads", flags.threads, "worker threads");

  try {
    app.parse(argc, argv);
    flags.out_set = flags.out_set || top_out->count() > 0;
    flags.seed_set = flags.seed_set || top_seed->count() > 0;
    flags.threads_set = flags.threads_set || top_thr->count() > 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  spinchain::ExperimentConfig cfg;
  try {
    if (!flags.preset.empty()) {
      if (!chosen.empty()) {
        std::fprintf(stderr, "error: --preset does not take a subcommand\n");
        return 1;
      }
      cfg = spinchain::figure_preset(flags.preset);
    } else {
      if (chosen.empty()) {
        std::fprintf(stderr,
                     "error: pass an experiment subcommand with --config, or "
                     "--preset figN (see --help)\n");
        return 1;
      }
      if (flags.config_path.empty()) {
        std::fprintf(stderr, "error: %s needs --config <path>\n", chosen.c_str());
        return 1;
      }
      cfg = spinchain::load_config(flags.config_path);
      if (chosen != "run" && chosen != cfg.experiment) {
        std::fprintf(stderr,
                     "error: subcommand '%s' does not match experiment '%s' "
                     "in the config\n",
                     chosen.c_str(), cfg.experiment.c_str());
        return 1;
      }
    }
    if (flags.seed_set) {
      cfg.seed = flags.seed;
      cfg.seed_set = true;
    }
    if (flags.out_set) cfg.out_dir = flags.out_dir;
    if (flags.threads_set) cfg.threads = flags.threads;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  }

  try {
    const auto files = spinchain::run_experiment(cfg);
    for (const auto& f : files) std::printf("wrote %s\n", f.c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "runtime error: %s\n", e.what());
    return 2;
  }
  return 0;
}
