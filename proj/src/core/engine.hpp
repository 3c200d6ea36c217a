#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "core/aer.hpp"
#include "core/config.hpp"
#include "core/lif.hpp"
#include "core/metrics.hpp"
#include "core/neuron_mem.hpp"
#include "core/synapse_mem.hpp"

namespace loki {

// Everything one timestep produced: the emitted packets in group order, the
// number of output spikes, and the cycles the whole timestep consumed (its
// spike events plus the leak-and-fire pass).
struct TimestepResult {
    std::vector<BlockAerPacket> packets;
    std::uint32_t spike_count = 0;
    std::uint64_t cycles_elapsed = 0;
};

struct RunOutput {
    SimReport report;
    std::vector<TimestepResult> timesteps;
};

// Cycle-accurate model of the neuron update pipeline.
//
// A spike event at input address a touches the eight synapse words 8a..8a+7,
// which land on banks 0,1,2,3,0,1,2,3 so the issue unit walks the MCCG banks
// round-robin, one issue per cycle. Relative to the event's start edge s:
//
//   issue word w            at s + w          (w = 0..7)
//   collect + read + update at s + 4 + w      (4-cycle synapse latency)
//   write word w back       at s + 5 + w
//
// giving 12 cycles from idle. While words 5..7 of one event are still in the
// update stage, the issue unit prefetches the next queued event's first three
// words, so a chained event starts 9 cycles after its predecessor and the
// steady-state cost is 9 cycles per spike: N chained spikes take 3 + 9N.
// Neuron memory traffic alternates banks; the write of word w-1 shares a
// cycle with the read of word w and never collides.
//
// The time reference event drains the pipeline and runs leak-and-fire over
// the eight neuron words (one read per cycle, write-back overlapping the next
// read), then spends one handshake per emitted packet: 8 + packets cycles by
// default. Those cycles are excluded from the measured (throughput) region.
class Core {
public:
    Core();

    // Loads weights, threshold and leak, zeroes the neuron state and resets
    // all counters. Fails with Err::Busy while a timestep is mid-stream.
    void program(const NetworkConfig& cfg);
    bool configured() const { return configured_; }

    // Processes one spike event; returns the cycles it consumed (12 from an
    // idle pipeline, 9 chained behind a previous spike).
    unsigned process_spike(unsigned address);

    // Ends the timestep: leak-and-fire over all neurons, packets out.
    TimestepResult process_time_reference();

    // Processes events strictly in order and aggregates the report.
    RunOutput run(std::span<const InputEvent> events);

    void set_emit_empty_blocks(bool on) { emit_empty_blocks_ = on; }
    void set_handshake_cycles(unsigned cycles) { handshake_cycles_ = cycles; }

    // Observation points; untimed.
    std::array<Potential, kNeuronCount> potentials() const;
    std::uint64_t cycle() const { return edge_; }
    SimReport report() const;
    Threshold threshold() const { return threshold_; }
    LeakConfig leak_config() const { return leak_; }
    const MccgMemory& synapse_memory() const { return synapse_mem_; }

private:
    struct Counters {
        std::uint64_t spike_cycles = 0;       // measured region
        std::uint64_t leakfire_cycles = 0;
        std::uint64_t sops = 0;
        std::uint64_t input_spikes = 0;
        std::uint64_t output_spikes = 0;
        std::uint64_t handshakes = 0;
        std::uint64_t timesteps = 0;
        std::uint64_t synapse_word_reads = 0;
        std::uint64_t neuron_word_accesses = 0;
    };

    void require_configured(const char* op) const;

    NeuronMemory neuron_mem_;
    MccgMemory synapse_mem_;
    Threshold threshold_ = 0;
    LeakConfig leak_ = LeakConfig::none();
    bool configured_ = false;
    bool emit_empty_blocks_ = false;
    unsigned handshake_cycles_ = 1;

    std::uint64_t edge_ = 0;          // absolute cycle edge, monotone
    std::uint64_t last_start_ = 0;    // start edge of the previous spike event
    bool chained_ = false;            // previous event still overlaps the pipe

    Counters counters_;
    std::uint64_t timestep_spike_cycles_ = 0;
};

} // namespace loki
