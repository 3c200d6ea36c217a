#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace loki {

// Counters of one measured run. The measured region covers spike processing
// only: configuration time and the per-timestep leak-and-fire pass are kept
// out of cycles_measured, so throughput figures describe the spike-driven
// update pipeline. Leak-fire activity still shows up where it costs energy,
// through neuron_word_accesses and handshakes.
struct SimReport {
    std::uint64_t cycles_measured = 0;
    std::uint64_t sops = 0;
    std::uint64_t input_spikes = 0;
    std::uint64_t output_spikes = 0;
    std::uint64_t handshakes = 0;
    std::uint64_t timesteps = 0;
    std::uint64_t synapse_word_reads = 0;
    std::uint64_t neuron_word_accesses = 0;

    // Enforces sops == 256 * input_spikes; throws Err::Internal otherwise.
    static SimReport checked(const SimReport& r);
};

// Field-wise sum, for folding the reports of independent cores or batch
// workers; associative and commutative.
SimReport merge_reports(const SimReport& a, const SimReport& b);

// Activity-based energy model. The coefficients are calibrated, not derived
// from circuit physics: the shipped defaults are fit so that the canonical
// dense workload (10 timesteps at 0% input sparsity on an all-zero network)
// reports 0.266 pJ/SOP. See default_energy_model() for the fit.
struct EnergyModel {
    double e_synapse_word_read = 0.0;   // J per 128-bit synapse word read
    double e_neuron_word_rw = 0.0;      // J per 256-bit neuron word access
    double e_logic_per_cycle = 0.0;     // J per measured pipeline cycle
    double e_handshake = 0.0;           // J per output packet handshake
};

EnergyModel default_energy_model();

// SOPs per second at the configured clock. Throws Err::ZeroDiv when no
// cycles were measured.
double throughput_sops_per_s(const SimReport& report, double clock_hz);

struct EnergyFigures {
    double total_joules = 0.0;
    std::optional<double> joules_per_sop;   // absent when the run did no SOPs
};

EnergyFigures energy(const SimReport& report, const EnergyModel& model);

// Two-layer inference energy: the first layer is not simulated, only its SOP
// count is known, so its energy is estimated at the second layer's J/SOP.
double energy_per_inference(const SimReport& layer2, const EnergyModel& model,
                            std::uint64_t first_layer_sops);

// Flat stats document. Keys: cycles, sops, gsops, pj_per_sop, input_spikes,
// output_spikes, handshakes, timesteps. gsops is omitted when no cycles were
// measured, pj_per_sop when no SOPs were performed. Output is byte-stable
// for identical inputs.
std::string stats_json(const SimReport& report, double clock_hz, const EnergyModel& model);
std::string stats_csv(const SimReport& report, double clock_hz, const EnergyModel& model);

} // namespace loki
