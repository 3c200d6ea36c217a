#include "core/golden.hpp"

#include <algorithm>

#include "core/engine.hpp"
#include "core/error.hpp"

namespace loki {

namespace {

// Oracle-local arithmetic. Same contracts as the production core, written
// independently on wide integers.

int sat8(int x) {
    if (x > 127) return 127;
    if (x < -128) return -128;
    return x;
}

int decay(int v, const LeakConfig& leak) {
    if (leak.is_none())
        return v;
    int magnitude = v < 0 ? -v : v;
    magnitude -= magnitude >> leak.shift_amount();
    return v < 0 ? -magnitude : magnitude;
}

} // namespace

GoldenSim::GoldenSim(const NetworkConfig& cfg) : cfg_(cfg) {}

void GoldenSim::integrate_spike(unsigned address) {
    if (address >= kInputCount)
        raise(Err::InvalidArg, "spike address out of range");
    for (unsigned i = 0; i < 256; ++i)
        v_[i] = sat8(v_[i] + cfg_.weights[address][i]);
}

std::vector<unsigned> GoldenSim::end_timestep() {
    std::vector<unsigned> fired;
    for (unsigned i = 0; i < 256; ++i) {
        if (v_[i] >= cfg_.threshold) {
            fired.push_back(i);
            v_[i] = 0;
        } else {
            v_[i] = decay(v_[i], cfg_.leak);
        }
    }
    return fired;
}

std::vector<unsigned> GoldenSim::timestep(std::span<const unsigned> spike_addresses) {
    for (unsigned address : spike_addresses)
        integrate_spike(address);
    return end_timestep();
}

GoldenSim::RunResult GoldenSim::run(std::span<const InputEvent> events) {
    RunResult out;
    for (const InputEvent& ev : events) {
        if (ev.is_spike()) {
            integrate_spike(ev.address);
            out.input_spikes += 1;
        } else {
            auto fired = end_timestep();
            out.output_spikes += fired.size();
            out.timesteps += 1;
            out.fired_per_timestep.push_back(std::move(fired));
        }
    }
    return out;
}

std::array<std::int8_t, 256> GoldenSim::potentials() const {
    std::array<std::int8_t, 256> out{};
    for (unsigned i = 0; i < 256; ++i)
        out[i] = static_cast<std::int8_t>(v_[i]);
    return out;
}

CompareVerdict compare_trajectories(
    const std::vector<std::vector<unsigned>>& engine_fires,
    const std::vector<std::vector<unsigned>>& golden_fires,
    const std::array<std::int8_t, 256>& engine_final,
    const std::array<std::int8_t, 256>& golden_final) {
    CompareVerdict verdict;
    if (engine_fires.size() != golden_fires.size()) {
        verdict.timestep = static_cast<std::int32_t>(
            std::min(engine_fires.size(), golden_fires.size()));
        verdict.detail = "timestep counts differ: engine " +
                         std::to_string(engine_fires.size()) + ", golden " +
                         std::to_string(golden_fires.size());
        return verdict;
    }
    for (std::size_t t = 0; t < engine_fires.size(); ++t) {
        const auto& a = engine_fires[t];
        const auto& b = golden_fires[t];
        if (a == b)
            continue;
        verdict.timestep = static_cast<std::int32_t>(t);
        // first index present in one fire set but not the other
        for (unsigned n = 0; n < 256; ++n) {
            bool in_a = std::binary_search(a.begin(), a.end(), n);
            bool in_b = std::binary_search(b.begin(), b.end(), n);
            if (in_a != in_b) {
                verdict.neuron = static_cast<std::int32_t>(n);
                verdict.detail = "timestep " + std::to_string(t) + ": neuron " +
                                 std::to_string(n) + (in_a ? " fired" : " did not fire") +
                                 " in the engine but " +
                                 (in_b ? "fired" : "did not fire") + " in the oracle";
                return verdict;
            }
        }
        verdict.detail = "fire sets differ at timestep " + std::to_string(t);
        return verdict;
    }
    for (unsigned n = 0; n < 256; ++n) {
        if (engine_final[n] != golden_final[n]) {
            verdict.timestep = -1;
            verdict.neuron = static_cast<std::int32_t>(n);
            verdict.detail = "final potential of neuron " + std::to_string(n) +
                             ": engine " + std::to_string(engine_final[n]) +
                             ", golden " + std::to_string(golden_final[n]);
            return verdict;
        }
    }
    verdict.bit_exact = true;
    verdict.detail = "bit-exact";
    return verdict;
}

CompareVerdict compare_runs(const NetworkConfig& engine_cfg,
                            const NetworkConfig& golden_cfg,
                            std::span<const InputEvent> events) {
    if (!(engine_cfg == golden_cfg))
        raise(Err::Mismatch, "engine and oracle configurations differ");

    Core core;
    core.program(engine_cfg);
    RunOutput engine_out = core.run(events);

    std::vector<std::vector<unsigned>> engine_fires;
    engine_fires.reserve(engine_out.timesteps.size());
    for (const TimestepResult& ts : engine_out.timesteps) {
        std::vector<unsigned> fired;
        for (const BlockAerPacket& p : ts.packets)
            for (unsigned idx : decode_block(p))
                fired.push_back(idx);
        engine_fires.push_back(std::move(fired));
    }

    GoldenSim golden(golden_cfg);
    GoldenSim::RunResult golden_out = golden.run(events);

    return compare_trajectories(engine_fires, golden_out.fired_per_timestep,
                                core.potentials(), golden.potentials());
}

} // namespace loki
