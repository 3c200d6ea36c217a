#pragma once

#include <cstdint>
#include <vector>

#include "core/aer.hpp"
#include "core/config.hpp"

namespace loki {

// The canonical peak-utilization workload: every input address spikes once
// per timestep (0% sparsity), keeping the neuron update pipeline filled.
std::vector<InputEvent> dense_events(unsigned timesteps);

// Parameter set the canonical workload runs on: all-zero weights, threshold
// 1, no leak. It produces no output spikes, so the measurement sees pure
// pipeline activity. The default energy model is calibrated against this
// config under dense_events(10).
NetworkConfig bench_config();

// Seeded generators for randomized equivalence trials. Weights are uniform
// in [-8,7], thresholds in [1,127], leak uniformly NoLeak or Shift(0..7);
// streams draw a timestep count in [1,50] and a per-timestep spike density,
// with spike order shuffled inside each timestep.
NetworkConfig random_config(std::uint64_t seed);
std::vector<InputEvent> random_events(std::uint64_t seed);

// Stable derivation of independent per-trial seeds from one master seed.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

} // namespace loki
