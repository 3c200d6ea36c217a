#include "loki.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "core/aer.hpp"
#include "core/config.hpp"
#include "core/engine.hpp"
#include "core/error.hpp"
#include "core/golden.hpp"
#include "core/metrics.hpp"
#include "core/stimulus.hpp"

using namespace loki;

namespace {

thread_local std::string g_last_error;

loki_status status_of(Err code) {
    switch (code) {
        case Err::InvalidArg: return LOKI_ERR_INVALID_ARG;
        case Err::Io: return LOKI_ERR_IO;
        case Err::Format: return LOKI_ERR_FORMAT;
        case Err::Parse: return LOKI_ERR_PARSE;
        case Err::Busy: return LOKI_ERR_BUSY;
        case Err::State: return LOKI_ERR_STATE;
        case Err::Timing: return LOKI_ERR_TIMING;
        case Err::Mismatch: return LOKI_ERR_MISMATCH;
        case Err::ZeroDiv: return LOKI_ERR_ZERO_DIV;
        case Err::Internal: return LOKI_ERR_INTERNAL;
    }
    return LOKI_ERR_INTERNAL;
}

loki_status fail(loki_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
loki_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const SimError& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail(LOKI_ERR_INTERNAL, e.what());
    }
}

char* dup_text(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string read_file(const char* path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(Err::Io, std::string("cannot open '") + path + "'");
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

void write_file(const char* path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        raise(Err::Io, std::string("cannot open '") + path + "' for writing");
    out << text;
    if (!out)
        raise(Err::Io, std::string("short write to '") + path + "'");
}

} // namespace

struct loki_events {
    std::vector<InputEvent> events;
    std::vector<std::string> warnings;
};

struct loki_sim {
    Core core;
    NetworkConfig config;
    double clock_hz = 667e6;
    EnergyModel energy_model = default_energy_model();
    std::vector<std::vector<BlockAerPacket>> packets_per_timestep;
};

struct loki_golden {
    GoldenSim model;
    GoldenSim::RunResult totals;
};

extern "C" {

const char* loki_status_name(loki_status status) {
    switch (status) {
        case LOKI_OK: return "ok";
        case LOKI_ERR_INVALID_ARG: return "invalid argument";
        case LOKI_ERR_IO: return "I/O error";
        case LOKI_ERR_FORMAT: return "bad config image";
        case LOKI_ERR_PARSE: return "bad event stream";
        case LOKI_ERR_BUSY: return "core busy";
        case LOKI_ERR_STATE: return "invalid state";
        case LOKI_ERR_TIMING: return "timing violation";
        case LOKI_ERR_MISMATCH: return "configuration mismatch";
        case LOKI_ERR_ZERO_DIV: return "undefined over zero cycles";
        case LOKI_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* loki_last_error(void) {
    return g_last_error.c_str();
}

const char* loki_version_string(void) {
    return "0.1.0";
}

/* ---- events ---- */

loki_status loki_events_parse_file(const char* path, loki_events** out) {
    return guarded([&]() -> loki_status {
        if (!path || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        std::string text = read_file(path);
        ParsedStream parsed = parse_event_stream(text);
        *out = new loki_events{std::move(parsed.events), std::move(parsed.warnings)};
        return LOKI_OK;
    });
}

loki_status loki_events_parse_text(const char* text, loki_events** out) {
    return guarded([&]() -> loki_status {
        if (!text || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        ParsedStream parsed = parse_event_stream(text);
        *out = new loki_events{std::move(parsed.events), std::move(parsed.warnings)};
        return LOKI_OK;
    });
}

loki_status loki_events_dense(uint32_t timesteps, loki_events** out) {
    return guarded([&]() -> loki_status {
        if (!out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        *out = new loki_events{dense_events(timesteps), {}};
        return LOKI_OK;
    });
}

void loki_events_free(loki_events* events) {
    delete events;
}

uint64_t loki_events_count(const loki_events* events) {
    return events ? events->events.size() : 0;
}

uint32_t loki_events_warning_count(const loki_events* events) {
    return events ? static_cast<uint32_t>(events->warnings.size()) : 0;
}

const char* loki_events_warning(const loki_events* events, uint32_t index) {
    if (!events || index >= events->warnings.size())
        return nullptr;
    return events->warnings[index].c_str();
}

loki_status loki_events_write_file(const loki_events* events, const char* path) {
    return guarded([&]() -> loki_status {
        if (!events || !path)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        write_file(path, serialize_events(events->events));
        return LOKI_OK;
    });
}

/* ---- simulator ---- */

void loki_energy_model_default(loki_energy_model* out) {
    if (!out)
        return;
    EnergyModel m = default_energy_model();
    out->e_synapse_word_read = m.e_synapse_word_read;
    out->e_neuron_word_rw = m.e_neuron_word_rw;
    out->e_logic_per_cycle = m.e_logic_per_cycle;
    out->e_handshake = m.e_handshake;
}

static loki_status sim_create_common(NetworkConfig cfg, loki_sim** out) {
    auto sim = std::make_unique<loki_sim>();
    sim->config = std::move(cfg);
    sim->clock_hz = sim->config.clock_hz;
    sim->core.program(sim->config);
    *out = sim.release();
    return LOKI_OK;
}

loki_status loki_sim_create(const char* config_path, loki_sim** out) {
    return guarded([&]() -> loki_status {
        if (!config_path || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        return sim_create_common(load_config_file(config_path), out);
    });
}

loki_status loki_sim_create_from_memory(const void* bytes, size_t len, loki_sim** out) {
    return guarded([&]() -> loki_status {
        if (!bytes || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        const auto* p = static_cast<const std::uint8_t*>(bytes);
        return sim_create_common(load_config(std::vector<std::uint8_t>(p, p + len)), out);
    });
}

void loki_sim_free(loki_sim* sim) {
    delete sim;
}

loki_status loki_sim_set_clock_hz(loki_sim* sim, double hz) {
    return guarded([&]() -> loki_status {
        if (!sim || !(hz > 0.0))
            return fail(LOKI_ERR_INVALID_ARG, "clock must be positive");
        sim->clock_hz = hz;
        return LOKI_OK;
    });
}

loki_status loki_sim_set_emit_empty_blocks(loki_sim* sim, int on) {
    return guarded([&]() -> loki_status {
        if (!sim)
            return fail(LOKI_ERR_INVALID_ARG, "null handle");
        sim->core.set_emit_empty_blocks(on != 0);
        return LOKI_OK;
    });
}

loki_status loki_sim_set_handshake_cycles(loki_sim* sim, uint32_t cycles) {
    return guarded([&]() -> loki_status {
        if (!sim)
            return fail(LOKI_ERR_INVALID_ARG, "null handle");
        sim->core.set_handshake_cycles(cycles);
        return LOKI_OK;
    });
}

loki_status loki_sim_set_energy_model(loki_sim* sim, const loki_energy_model* model) {
    return guarded([&]() -> loki_status {
        if (!sim || !model)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        if (model->e_synapse_word_read < 0 || model->e_neuron_word_rw < 0 ||
            model->e_logic_per_cycle < 0 || model->e_handshake < 0)
            return fail(LOKI_ERR_INVALID_ARG, "energy coefficients must be non-negative");
        sim->energy_model = EnergyModel{model->e_synapse_word_read,
                                        model->e_neuron_word_rw,
                                        model->e_logic_per_cycle,
                                        model->e_handshake};
        return LOKI_OK;
    });
}

loki_status loki_sim_run(loki_sim* sim, const loki_events* events) {
    return guarded([&]() -> loki_status {
        if (!sim || !events)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        RunOutput out = sim->core.run(events->events);
        for (TimestepResult& ts : out.timesteps)
            sim->packets_per_timestep.push_back(std::move(ts.packets));
        return LOKI_OK;
    });
}

loki_status loki_sim_report(const loki_sim* sim, loki_report* out) {
    return guarded([&]() -> loki_status {
        if (!sim || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        SimReport r = sim->core.report();
        EnergyFigures fig = energy(r, sim->energy_model);
        out->cycles = r.cycles_measured;
        out->sops = r.sops;
        out->input_spikes = r.input_spikes;
        out->output_spikes = r.output_spikes;
        out->handshakes = r.handshakes;
        out->timesteps = r.timesteps;
        out->synapse_word_reads = r.synapse_word_reads;
        out->neuron_word_accesses = r.neuron_word_accesses;
        out->gsops = r.cycles_measured
                         ? throughput_sops_per_s(r, sim->clock_hz) / 1e9
                         : 0.0;
        out->total_joules = fig.total_joules;
        out->pj_per_sop = fig.joules_per_sop
                              ? *fig.joules_per_sop * 1e12
                              : std::numeric_limits<double>::quiet_NaN();
        return LOKI_OK;
    });
}

loki_status loki_sim_stats_json(const loki_sim* sim, char** out_text) {
    return guarded([&]() -> loki_status {
        if (!sim || !out_text)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        *out_text = dup_text(stats_json(sim->core.report(), sim->clock_hz,
                                        sim->energy_model));
        return *out_text ? LOKI_OK : fail(LOKI_ERR_INTERNAL, "out of memory");
    });
}

loki_status loki_sim_stats_csv(const loki_sim* sim, char** out_text) {
    return guarded([&]() -> loki_status {
        if (!sim || !out_text)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        *out_text = dup_text(stats_csv(sim->core.report(), sim->clock_hz,
                                       sim->energy_model));
        return *out_text ? LOKI_OK : fail(LOKI_ERR_INTERNAL, "out of memory");
    });
}

void loki_text_free(char* text) {
    std::free(text);
}

loki_status loki_sim_potentials(const loki_sim* sim, int8_t out[256]) {
    return guarded([&]() -> loki_status {
        if (!sim || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        auto vals = sim->core.potentials();
        std::memcpy(out, vals.data(), vals.size());
        return LOKI_OK;
    });
}

uint64_t loki_sim_cycle(const loki_sim* sim) {
    return sim ? sim->core.cycle() : 0;
}

loki_status loki_sim_output_events(const loki_sim* sim, loki_events** out) {
    return guarded([&]() -> loki_status {
        if (!sim || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        *out = new loki_events{packets_to_events(sim->packets_per_timestep), {}};
        return LOKI_OK;
    });
}

loki_status loki_sim_write_output_log(const loki_sim* sim, const char* path) {
    return guarded([&]() -> loki_status {
        if (!sim || !path)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        write_file(path, serialize_packet_log(sim->packets_per_timestep));
        return LOKI_OK;
    });
}

/* ---- golden model ---- */

loki_status loki_golden_create(const char* config_path, loki_golden** out) {
    return guarded([&]() -> loki_status {
        if (!config_path || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        *out = new loki_golden{GoldenSim(load_config_file(config_path)), {}};
        return LOKI_OK;
    });
}

loki_status loki_golden_create_from_memory(const void* bytes, size_t len,
                                           loki_golden** out) {
    return guarded([&]() -> loki_status {
        if (!bytes || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        const auto* p = static_cast<const std::uint8_t*>(bytes);
        *out = new loki_golden{
            GoldenSim(load_config(std::vector<std::uint8_t>(p, p + len))), {}};
        return LOKI_OK;
    });
}

void loki_golden_free(loki_golden* golden) {
    delete golden;
}

loki_status loki_golden_run(loki_golden* golden, const loki_events* events) {
    return guarded([&]() -> loki_status {
        if (!golden || !events)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        GoldenSim::RunResult r = golden->model.run(events->events);
        golden->totals.input_spikes += r.input_spikes;
        golden->totals.output_spikes += r.output_spikes;
        golden->totals.timesteps += r.timesteps;
        for (auto& fired : r.fired_per_timestep)
            golden->totals.fired_per_timestep.push_back(std::move(fired));
        return LOKI_OK;
    });
}

loki_status loki_golden_potentials(const loki_golden* golden, int8_t out[256]) {
    return guarded([&]() -> loki_status {
        if (!golden || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        auto vals = golden->model.potentials();
        std::memcpy(out, vals.data(), vals.size());
        return LOKI_OK;
    });
}

loki_status loki_golden_output_events(const loki_golden* golden, loki_events** out) {
    return guarded([&]() -> loki_status {
        if (!golden || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        std::vector<InputEvent> events;
        for (const auto& fired : golden->totals.fired_per_timestep) {
            for (unsigned idx : fired)
                events.push_back(InputEvent::spike(idx));
            events.push_back(InputEvent::time_reference());
        }
        *out = new loki_events{std::move(events), {}};
        return LOKI_OK;
    });
}

loki_status loki_golden_stats_json(const loki_golden* golden, char** out_text) {
    return guarded([&]() -> loki_status {
        if (!golden || !out_text)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        const auto& t = golden->totals;
        std::string json = "{\n";
        json += "  \"cycles\": 0,\n";
        json += "  \"sops\": " + std::to_string(256 * t.input_spikes) + ",\n";
        json += "  \"input_spikes\": " + std::to_string(t.input_spikes) + ",\n";
        json += "  \"output_spikes\": " + std::to_string(t.output_spikes) + ",\n";
        json += "  \"handshakes\": 0,\n";
        json += "  \"timesteps\": " + std::to_string(t.timesteps) + "\n";
        json += "}\n";
        *out_text = dup_text(json);
        return *out_text ? LOKI_OK : fail(LOKI_ERR_INTERNAL, "out of memory");
    });
}

/* ---- equivalence checking ---- */

static void fill_verdict(const CompareVerdict& v, loki_verdict* out) {
    out->bit_exact = v.bit_exact ? 1 : 0;
    out->timestep = v.timestep;
    out->neuron = v.neuron;
    std::snprintf(out->detail, sizeof out->detail, "%s", v.detail.c_str());
}

loki_status loki_compare_file(const char* config_path, const loki_events* events,
                              loki_verdict* out) {
    return guarded([&]() -> loki_status {
        if (!config_path || !events || !out)
            return fail(LOKI_ERR_INVALID_ARG, "null argument");
        NetworkConfig cfg = load_config_file(config_path);
        fill_verdict(compare_runs(cfg, cfg, events->events), out);
        return LOKI_OK;
    });
}

loki_status loki_compare_trials(uint32_t trials, uint64_t seed, loki_verdict* out,
                                uint32_t* failed_trial) {
    return guarded([&]() -> loki_status {
        if (!out || trials == 0)
            return fail(LOKI_ERR_INVALID_ARG, "need a verdict pointer and trials > 0");

        std::vector<CompareVerdict> verdicts(trials);
        std::atomic<uint32_t> next{0};
        auto worker = [&]() {
            for (;;) {
                uint32_t i = next.fetch_add(1);
                if (i >= trials)
                    return;
                try {
                    NetworkConfig cfg = random_config(trial_seed(seed, 2ull * i));
                    auto events = random_events(trial_seed(seed, 2ull * i + 1));
                    verdicts[i] = compare_runs(cfg, cfg, events);
                } catch (const std::exception& e) {
                    verdicts[i].bit_exact = false;
                    verdicts[i].detail = std::string("error: ") + e.what();
                }
            }
        };

        unsigned n_workers = std::thread::hardware_concurrency();
        if (n_workers == 0)
            n_workers = 1;
        n_workers = std::min<unsigned>({n_workers, trials, 8});
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < n_workers; ++w)
            pool.emplace_back(worker);
        worker();
        for (auto& t : pool)
            t.join();

        // lowest failing trial index, for a deterministic report
        for (uint32_t i = 0; i < trials; ++i) {
            if (!verdicts[i].bit_exact) {
                fill_verdict(verdicts[i], out);
                if (failed_trial)
                    *failed_trial = i;
                return LOKI_OK;
            }
        }
        CompareVerdict ok;
        ok.bit_exact = true;
        ok.detail = "bit-exact over " + std::to_string(trials) + " trials";
        fill_verdict(ok, out);
        return LOKI_OK;
    });
}

} /* extern "C" */
