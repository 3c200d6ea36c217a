#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/aer.hpp"
#include "core/config.hpp"

namespace loki {

// Deliberately plain functional model of the quantized LIF layer: no
// pipeline, no banked memories, no cycle accounting. It re-implements the
// saturating integration, shift leak and threshold comparison on wide ints
// rather than calling the production arithmetic, so a bug there cannot
// cancel against a matching bug here. Used as the bit-exactness oracle for
// the cycle-accurate core.
class GoldenSim {
public:
    explicit GoldenSim(const NetworkConfig& cfg);

    // Integrate one spike into all 256 potentials.
    void integrate_spike(unsigned address);

    // End-of-timestep pass; returns the fired neuron indices, ascending.
    std::vector<unsigned> end_timestep();

    // One full timestep: the spikes in order, then leak-and-fire.
    std::vector<unsigned> timestep(std::span<const unsigned> spike_addresses);

    struct RunResult {
        std::vector<std::vector<unsigned>> fired_per_timestep;
        std::uint64_t input_spikes = 0;
        std::uint64_t output_spikes = 0;
        std::uint64_t timesteps = 0;
    };

    RunResult run(std::span<const InputEvent> events);

    std::array<std::int8_t, 256> potentials() const;
    const NetworkConfig& config() const { return cfg_; }

private:
    NetworkConfig cfg_;
    std::array<int, 256> v_{};   // held in wide ints, always within int8 range
};

// Outcome of checking the cycle-accurate engine against the oracle. When the
// runs diverge, timestep/neuron point at the first difference; timestep -1
// flags a final-potential mismatch after all timesteps agreed.
struct CompareVerdict {
    bool bit_exact = false;
    std::int32_t timestep = -1;
    std::int32_t neuron = -1;
    std::string detail;
};

// Locates the first divergence between two trajectories: per-timestep fire
// sets first, final potentials second.
CompareVerdict compare_trajectories(
    const std::vector<std::vector<unsigned>>& engine_fires,
    const std::vector<std::vector<unsigned>>& golden_fires,
    const std::array<std::int8_t, 256>& engine_final,
    const std::array<std::int8_t, 256>& golden_final);

// Runs the engine and the oracle on the same configuration and event stream
// and compares them. The two configurations must be identical; passing
// different ones is an Err::Mismatch, not a divergence.
CompareVerdict compare_runs(const NetworkConfig& engine_cfg,
                            const NetworkConfig& golden_cfg,
                            std::span<const InputEvent> events);

} // namespace loki
