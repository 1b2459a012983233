#pragma once

#include "spinchain/config.hpp"

namespace spinchain {

// Runs one experiment, writing CSV artifacts under cfg.out_dir.
// Deterministic: identical config (including seed) produces byte-identical
// files. Returns the list of files written.
std::vector<std::string> run_experiment(const ExperimentConfig& cfg);

}  // namespace spinchain
