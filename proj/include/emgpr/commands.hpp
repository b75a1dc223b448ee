#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emgpr/evaluation.hpp"

namespace emgpr {

/// Effective configuration for one CLI invocation. Every field has a
/// default; the whole struct is echoed as config_echo.json next to the
/// outputs of every command.
struct RunConfig {
  std::string command;
  std::string data_dir;
  std::string out_dir;
  std::uint64_t seed = 42;

  SynthConfig synth;
  PipelineConfig pipeline;
  std::size_t n_train = 450;

  std::vector<int> k_values;     // components sweep; defaults to 1..30
  std::vector<int> train_sizes;  // split sweep; defaults to Table-style sizes

  /// Derive the per-component sub-seeds (split, init, smo, synth) from the
  /// global seed and push them into the nested configs.
  void resolve_seeds();
};

void cmd_synth(const RunConfig& cfg);
void cmd_extract(const RunConfig& cfg);
void cmd_eval(const RunConfig& cfg);
void cmd_sweep(const RunConfig& cfg, const std::string& axis);
void cmd_grid(const RunConfig& cfg);

}  // namespace emgpr
