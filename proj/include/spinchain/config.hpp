#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinchain/chain_spec.hpp"

namespace spinchain {

// Batch experiment description. Loadable from TOML (primary) or JSON;
// command-line flags override file values.
struct ExperimentConfig {
  std::string experiment;        // coeffs | measure-sweep | flux | divisibility
                                 // | qpt | spectrum | excitations | gad-fit
                                 // | fixed-point
  ChainSpec spec;                // uniform shorthand or full lists
  double dt = 0.05;              // time grid step
  double horizon = -1.0;         // <0 -> default 2N/3
  std::vector<double> h_values;  // sweep grids
  std::vector<double> j0_values;
  double t_max2 = -1.0;          // divisibility grid extent (t and t1)
  std::string out_dir = ".";
  std::uint64_t seed = 0;        // mandatory for randomized experiments
  bool seed_set = false;
  int threads = 0;
  int n_states = 0;              // randomized-ensemble size override
};

// Parses a config document. `format` is "toml", "json", or "auto"
// (file-extension or first-character sniff). Throws std::runtime_error
// with a line-anchored message on malformed input.
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& format = "auto");
ExperimentConfig load_config(const std::string& path);

// Built-in per-figure presets ("fig1" .. "fig8").
ExperimentConfig figure_preset(const std::string& name);

// Minimal TOML reader covering the config schema: top-level and [section]
// tables, dotted keys, strings, booleans, integers, floats and flat arrays.
// Emits the equivalent JSON text (keys nested per table).
std::string toml_subset_to_json(const std::string& toml_text);

}  // namespace spinchain
