#include "core/engine.hpp"

#include <bit>
#include <string>

#include "core/error.hpp"

namespace loki {

namespace {

constexpr unsigned kWordsPerEvent = 8;        // 256 neurons / 32 per word
constexpr unsigned kEventSpan = 12;           // idle-start event, cycles
constexpr unsigned kChainedSpacing = 9;       // start-to-start when chained

unsigned neuron_bank_of(unsigned word) { return word & 1u; }
unsigned bank_word_of(unsigned word) { return word >> 1; }

} // namespace

Core::Core() = default;

void Core::require_configured(const char* op) const {
    if (!configured_)
        raise(Err::State, std::string(op) + " on an unconfigured core");
}

void Core::program(const NetworkConfig& cfg) {
    if (chained_)
        raise(Err::Busy, "cannot program while a timestep is mid-stream");
    synapse_mem_.clear();
    for (unsigned addr = 0; addr < kInputCount; ++addr)
        for (unsigned group = 0; group < kWordsPerEvent; ++group) {
            WeightWord w;
            for (unsigned i = 0; i < kWeightsPerWord; ++i)
                w[i] = cfg.weights[addr][group * kWeightsPerWord + i];
            synapse_mem_.load_word(SynapseAddress::decode(group + 8 * addr), w);
        }
    neuron_mem_.zero();
    threshold_ = cfg.threshold;
    leak_ = cfg.leak;
    configured_ = true;
    edge_ = 0;
    last_start_ = 0;
    chained_ = false;
    counters_ = {};
    timestep_spike_cycles_ = 0;
}

unsigned Core::process_spike(unsigned address) {
    require_configured("process_spike");
    if (address >= kInputCount)
        raise(Err::InvalidArg,
              "input address " + std::to_string(address) + " out of range [0,255]");

    const std::uint64_t start = chained_ ? last_start_ + kChainedSpacing : edge_;
    const std::uint64_t base_word = 8u * address;

    std::array<NeuronWord, kWordsPerEvent> updated{};
    unsigned collected = 0;
    unsigned written = 0;

    for (std::uint64_t e = start; e <= start + kEventSpan; ++e) {
        // Collect is ordered before the same-cycle issue: the enable spacing
        // lets a bank accept a new address in the cycle its data leaves.
        if (e >= start + 4 && e < start + 4 + kWordsPerEvent) {
            unsigned w = static_cast<unsigned>(e - start - 4);
            WeightWord weights = synapse_mem_.collect_read(w & 3u, e);
            NeuronWord vals =
                neuron_mem_.read(neuron_bank_of(w), bank_word_of(w), e);
            for (unsigned i = 0; i < kWeightsPerWord; ++i)
                updated[w][i] = integrate(vals[i], weights[i]);
            counters_.sops += kWeightsPerWord;
            counters_.synapse_word_reads += 1;
            counters_.neuron_word_accesses += 1;
            ++collected;
        }
        if (e >= start + 5 && e < start + 5 + kWordsPerEvent) {
            unsigned w = static_cast<unsigned>(e - start - 5);
            neuron_mem_.write(neuron_bank_of(w), bank_word_of(w), updated[w], e);
            counters_.neuron_word_accesses += 1;
            ++written;
        }
        if (e < start + kWordsPerEvent)
            synapse_mem_.issue_read(
                SynapseAddress::decode(static_cast<unsigned>(base_word + (e - start))), e);
    }

    if (collected != kWordsPerEvent || written != kWordsPerEvent)
        raise(Err::Internal, "fetched words not all consumed exactly once");

    const std::uint64_t end = start + kEventSpan;
    const unsigned consumed = static_cast<unsigned>(end - edge_);
    if (consumed != kEventSpan && consumed != kChainedSpacing)
        raise(Err::Internal, "spike event consumed unexpected cycle count");

    edge_ = end;
    last_start_ = start;
    chained_ = true;
    counters_.input_spikes += 1;
    counters_.spike_cycles += consumed;
    timestep_spike_cycles_ += consumed;
    return consumed;
}

TimestepResult Core::process_time_reference() {
    require_configured("process_time_reference");
    chained_ = false;   // pipeline drained; the next spike starts from idle

    const std::uint64_t start = edge_;
    TimestepResult result;
    for (unsigned group = 0; group < kNeuronWords; ++group) {
        NeuronWord vals =
            neuron_mem_.read(neuron_bank_of(group), bank_word_of(group), start + group);
        std::uint32_t vector = 0;
        for (unsigned i = 0; i < kNeuronsPerWord; ++i) {
            LeakFireResult r = leak_fire_step(vals[i], threshold_, leak_);
            if (r.fired) {
                if (r.potential != 0)
                    raise(Err::Internal, "fired neuron not reset to zero");
                vector |= 1u << i;
            }
#ifdef LOKISIM_FAULT_INJECT
            // deliberate off-by-one decay, for exercising divergence reports
            if (!r.fired && r.potential > 0)
                r.potential = static_cast<Potential>(r.potential - 1);
#endif
            vals[i] = r.potential;
        }
        neuron_mem_.write(neuron_bank_of(group), bank_word_of(group), vals,
                          start + group + 1);
        counters_.neuron_word_accesses += 2;
        if (vector != 0 || emit_empty_blocks_) {
            result.packets.push_back(
                BlockAerPacket{static_cast<std::uint8_t>(group), vector});
            result.spike_count += static_cast<unsigned>(std::popcount(vector));
        }
    }

    const std::uint64_t consumed =
        kNeuronWords +
        static_cast<std::uint64_t>(handshake_cycles_) * result.packets.size();
    edge_ += consumed;
    counters_.leakfire_cycles += consumed;
    counters_.output_spikes += result.spike_count;
    counters_.handshakes += result.packets.size();
    counters_.timesteps += 1;

    result.cycles_elapsed = timestep_spike_cycles_ + consumed;
    timestep_spike_cycles_ = 0;
    return result;
}

RunOutput Core::run(std::span<const InputEvent> events) {
    require_configured("run");
    RunOutput out;
    for (const InputEvent& ev : events) {
        if (ev.is_spike())
            process_spike(ev.address);
        else
            out.timesteps.push_back(process_time_reference());
    }
    out.report = report();
    return out;
}

std::array<Potential, kNeuronCount> Core::potentials() const {
    std::array<Potential, kNeuronCount> out{};
    for (unsigned group = 0; group < kNeuronWords; ++group) {
        const NeuronWord& word = neuron_mem_.peek(neuron_bank_of(group), bank_word_of(group));
        for (unsigned i = 0; i < kNeuronsPerWord; ++i)
            out[group * kNeuronsPerWord + i] = word[i];
    }
    return out;
}

SimReport Core::report() const {
    SimReport r;
    r.cycles_measured = counters_.spike_cycles;
    r.sops = counters_.sops;
    r.input_spikes = counters_.input_spikes;
    r.output_spikes = counters_.output_spikes;
    r.handshakes = counters_.handshakes;
    r.timesteps = counters_.timesteps;
    r.synapse_word_reads = counters_.synapse_word_reads;
    r.neuron_word_accesses = counters_.neuron_word_accesses;
    return SimReport::checked(r);
}

} // namespace loki
