// Command-line front end for the LOKI core simulator. Talks to the engine
// exclusively through the public C API in loki.h.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loki.h"

namespace {

enum LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

int log_level() {
    static int level = [] {
        const char* env = std::getenv("LOKI_SIM_LOG");
        if (!env)
            return static_cast<int>(kWarn);
        std::string v = env;
        if (v == "error" || v == "0") return static_cast<int>(kError);
        if (v == "warn" || v == "1") return static_cast<int>(kWarn);
        if (v == "info" || v == "2") return static_cast<int>(kInfo);
        if (v == "debug" || v == "3") return static_cast<int>(kDebug);
        return static_cast<int>(kWarn);
    }();
    return level;
}

void log_at(int level, const std::string& msg) {
    if (log_level() >= level)
        std::cerr << "loki: " << msg << "\n";
}

[[noreturn]] void die(loki_status status, const std::string& context) {
    std::cerr << "loki: " << context << ": " << loki_status_name(status);
    const char* detail = loki_last_error();
    if (detail && *detail)
        std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    std::exit(1);
}

void check(loki_status status, const std::string& context) {
    if (status != LOKI_OK)
        die(status, context);
}

// "T=10" or plain "10"
unsigned parse_gen_dense(const std::string& value) {
    std::string digits = value;
    if (digits.rfind("T=", 0) == 0)
        digits = digits.substr(2);
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(digits, &pos, 10);
        if (pos == digits.size() && v > 0)
            return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "loki: bad --gen-dense value '" << value << "', expected T=<n>\n";
    std::exit(1);
}

struct EventsHandle {
    loki_events* ptr = nullptr;
    ~EventsHandle() { loki_events_free(ptr); }
};

struct SimHandle {
    loki_sim* ptr = nullptr;
    ~SimHandle() { loki_sim_free(ptr); }
};

struct GoldenHandle {
    loki_golden* ptr = nullptr;
    ~GoldenHandle() { loki_golden_free(ptr); }
};

void load_events(const std::string& events_path, const std::string& gen_dense,
                 EventsHandle& out) {
    if (!gen_dense.empty()) {
        check(loki_events_dense(parse_gen_dense(gen_dense), &out.ptr),
              "generating dense stream");
    } else if (!events_path.empty()) {
        check(loki_events_parse_file(events_path.c_str(), &out.ptr),
              "parsing '" + events_path + "'");
        for (uint32_t i = 0; i < loki_events_warning_count(out.ptr); ++i)
            log_at(kWarn, loki_events_warning(out.ptr, i));
    } else {
        std::cerr << "loki: need --events <file> or --gen-dense T=<n>\n";
        std::exit(1);
    }
}

// Minimal all-zero parameter image (threshold 1, no leak): the workload the
// shipped energy model is calibrated on.
std::vector<uint8_t> builtin_bench_image() {
    std::vector<uint8_t> image(32777, 0);
    image[0] = 'L';
    image[1] = 'O';
    image[2] = 'K';
    image[3] = 'I';
    image[4] = 1;      // version
    image[5] = 0xff;   // no leak
    image[6] = 1;      // threshold
    return image;
}

struct EnergyFlags {
    double e_synapse = -1.0;
    double e_neuron = -1.0;
    double e_logic = -1.0;
    double e_handshake = -1.0;

    void apply(loki_sim* sim) const {
        loki_energy_model model;
        loki_energy_model_default(&model);
        bool any = false;
        if (e_synapse >= 0) { model.e_synapse_word_read = e_synapse; any = true; }
        if (e_neuron >= 0) { model.e_neuron_word_rw = e_neuron; any = true; }
        if (e_logic >= 0) { model.e_logic_per_cycle = e_logic; any = true; }
        if (e_handshake >= 0) { model.e_handshake = e_handshake; any = true; }
        if (any)
            check(loki_sim_set_energy_model(sim, &model), "setting energy model");
    }
};

void add_energy_flags(CLI::App* cmd, EnergyFlags& flags) {
    cmd->add_option("--e-synapse", flags.e_synapse,
                    "override J per synapse word read");
    cmd->add_option("--e-neuron", flags.e_neuron,
                    "override J per neuron word access");
    cmd->add_option("--e-logic", flags.e_logic, "override J per measured cycle");
    cmd->add_option("--e-handshake", flags.e_handshake,
                    "override J per output handshake");
}

// output paths are checked up front so a long run cannot end in EACCES
void ensure_writable(const std::string& path) {
    if (path.empty() || path == "-")
        return;
    std::ofstream probe(path, std::ios::app);
    if (!probe) {
        std::cerr << "loki: cannot write '" << path << "'\n";
        std::exit(1);
    }
}

void write_stats(loki_sim* sim, const std::string& path) {
    char* text = nullptr;
    bool csv = path.size() >= 4 && path.rfind(".csv") == path.size() - 4;
    check(csv ? loki_sim_stats_csv(sim, &text) : loki_sim_stats_json(sim, &text),
          "rendering stats");
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(path, std::ios::trunc);
        if (!out) {
            loki_text_free(text);
            std::cerr << "loki: cannot write '" << path << "'\n";
            std::exit(1);
        }
        out << text;
    }
    loki_text_free(text);
}

int cmd_sim(const std::string& config_path, const std::string& events_path,
            const std::string& gen_dense, const std::string& stats_out,
            const std::string& events_out, const std::string& chain_config,
            double clock_hz, bool emit_empty_blocks, const EnergyFlags& energy) {
    ensure_writable(stats_out);
    ensure_writable(events_out);
    EventsHandle events;
    load_events(events_path, gen_dense, events);

    SimHandle sim;
    check(loki_sim_create(config_path.c_str(), &sim.ptr),
          "loading '" + config_path + "'");
    if (clock_hz > 0)
        check(loki_sim_set_clock_hz(sim.ptr, clock_hz), "setting clock");
    if (emit_empty_blocks)
        check(loki_sim_set_emit_empty_blocks(sim.ptr, 1), "setting block emission");
    energy.apply(sim.ptr);

    check(loki_sim_run(sim.ptr, events.ptr), "running simulation");

    loki_sim* reported = sim.ptr;
    SimHandle layer2;
    if (!chain_config.empty()) {
        // feed this core's output spikes into a second core; stats and output
        // then describe the chained layer
        EventsHandle layer2_in;
        check(loki_sim_output_events(sim.ptr, &layer2_in.ptr), "collecting output");
        check(loki_sim_create(chain_config.c_str(), &layer2.ptr),
              "loading '" + chain_config + "'");
        if (clock_hz > 0)
            check(loki_sim_set_clock_hz(layer2.ptr, clock_hz), "setting clock");
        if (emit_empty_blocks)
            check(loki_sim_set_emit_empty_blocks(layer2.ptr, 1),
                  "setting block emission");
        energy.apply(layer2.ptr);
        check(loki_sim_run(layer2.ptr, layer2_in.ptr), "running chained layer");
        loki_report first;
        check(loki_sim_report(sim.ptr, &first), "reading report");
        log_at(kInfo, "layer 1: " + std::to_string(first.sops) + " SOPs, " +
                          std::to_string(first.output_spikes) + " output spikes");
        reported = layer2.ptr;
    }

    write_stats(reported, stats_out);
    if (!events_out.empty())
        check(loki_sim_write_output_log(reported, events_out.c_str()),
              "writing '" + events_out + "'");

    loki_report r;
    check(loki_sim_report(reported, &r), "reading report");
    log_at(kInfo, "done: " + std::to_string(r.cycles) + " measured cycles, " +
                      std::to_string(r.sops) + " SOPs, " +
                      std::to_string(r.output_spikes) + " output spikes");
    return 0;
}

int cmd_oracle(const std::string& config_path, const std::string& events_path,
               const std::string& gen_dense, const std::string& stats_out,
               const std::string& events_out) {
    ensure_writable(stats_out);
    ensure_writable(events_out);
    EventsHandle events;
    load_events(events_path, gen_dense, events);

    GoldenHandle golden;
    check(loki_golden_create(config_path.c_str(), &golden.ptr),
          "loading '" + config_path + "'");
    check(loki_golden_run(golden.ptr, events.ptr), "running oracle");

    if (!events_out.empty()) {
        EventsHandle out_events;
        check(loki_golden_output_events(golden.ptr, &out_events.ptr),
              "collecting output");
        check(loki_events_write_file(out_events.ptr, events_out.c_str()),
              "writing '" + events_out + "'");
    }
    char* text = nullptr;
    check(loki_golden_stats_json(golden.ptr, &text), "rendering stats");
    if (stats_out.empty() || stats_out == "-") {
        std::cout << text;
    } else {
        std::ofstream out(stats_out, std::ios::trunc);
        if (!out) {
            loki_text_free(text);
            std::cerr << "loki: cannot write '" << stats_out << "'\n";
            std::exit(1);
        }
        out << text;
    }
    loki_text_free(text);
    return 0;
}

int cmd_compare(const std::string& config_path, const std::string& events_path,
                const std::string& gen_dense, unsigned trials, uint64_t seed) {
    loki_verdict verdict;
    if (trials > 0) {
        uint32_t failed_trial = 0;
        check(loki_compare_trials(trials, seed, &verdict, &failed_trial),
              "running trials");
        if (!verdict.bit_exact) {
            std::cout << "DIVERGED at trial " << failed_trial << ": "
                      << verdict.detail << "\n";
            return 1;
        }
        std::cout << verdict.detail << "\n";
        return 0;
    }
    if (config_path.empty()) {
        std::cerr << "loki: compare needs --config (with --events) or --trials\n";
        return 1;
    }
    EventsHandle events;
    load_events(events_path, gen_dense, events);
    check(loki_compare_file(config_path.c_str(), events.ptr, &verdict),
          "comparing");
    if (!verdict.bit_exact) {
        std::cout << "DIVERGED: " << verdict.detail << "\n";
        return 1;
    }
    std::cout << "bit-exact: engine matches the golden model\n";
    return 0;
}

int cmd_bench(const std::string& config_path, const std::string& gen_dense,
              const std::string& stats_out, double clock_hz,
              const EnergyFlags& energy) {
    unsigned timesteps = gen_dense.empty() ? 10 : parse_gen_dense(gen_dense);
    EventsHandle events;
    check(loki_events_dense(timesteps, &events.ptr), "generating dense stream");

    SimHandle sim;
    if (!config_path.empty()) {
        check(loki_sim_create(config_path.c_str(), &sim.ptr),
              "loading '" + config_path + "'");
    } else {
        auto image = builtin_bench_image();
        check(loki_sim_create_from_memory(image.data(), image.size(), &sim.ptr),
              "creating bench core");
    }
    if (clock_hz > 0)
        check(loki_sim_set_clock_hz(sim.ptr, clock_hz), "setting clock");
    energy.apply(sim.ptr);

    auto wall_start = std::chrono::steady_clock::now();
    check(loki_sim_run(sim.ptr, events.ptr), "running benchmark");
    std::chrono::duration<double> wall = std::chrono::steady_clock::now() - wall_start;

    loki_report r;
    check(loki_sim_report(sim.ptr, &r), "reading report");
    double clock = clock_hz > 0 ? clock_hz : 667e6;

    std::printf("model throughput: %.3f GSOP/s at %.1f MHz (%llu SOPs in %llu cycles)\n",
                r.gsops, clock / 1e6, static_cast<unsigned long long>(r.sops),
                static_cast<unsigned long long>(r.cycles));
    std::printf("model energy:     %.3f pJ/SOP\n", r.pj_per_sop);
    double total_cycles = static_cast<double>(loki_sim_cycle(sim.ptr));
    double host_rate = wall.count() > 0 ? total_cycles / wall.count() : 0.0;
    std::printf("host simulation:  %.2f Mcycles/s (%.0f cycles in %.3f s wall)\n",
                host_rate / 1e6, total_cycles, wall.count());

    if (!stats_out.empty())
        write_stats(sim.ptr, stats_out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle-accurate simulator of the LOKI SNN accelerator core"};
    app.require_subcommand(1);

    std::string config_path, events_path, gen_dense, stats_out, events_out;
    std::string chain_config;
    double clock_hz = 0.0;
    bool emit_empty_blocks = false;
    unsigned trials = 0;
    uint64_t seed = 1;
    EnergyFlags energy;

    auto* sim = app.add_subcommand("sim", "run the cycle-accurate simulator");
    sim->add_option("--config", config_path, "core parameter image")->required();
    sim->add_option("--events", events_path, "input event stream");
    sim->add_option("--gen-dense", gen_dense, "synthetic dense stream, T=<timesteps>");
    sim->add_option("--stats-out", stats_out, "stats file (.csv for CSV, else JSON)");
    sim->add_option("--events-out", events_out, "output spike log");
    sim->add_option("--chain", chain_config, "feed output into a second core");
    sim->add_option("--clock", clock_hz, "clock frequency in Hz (default 667e6)");
    sim->add_flag("--emit-empty-blocks", emit_empty_blocks,
                  "transmit all-zero spike vectors too");
    sim->add_option("--seed", seed, "generator seed");
    add_energy_flags(sim, energy);

    auto* oracle = app.add_subcommand("oracle", "run the golden functional model");
    oracle->add_option("--config", config_path, "core parameter image")->required();
    oracle->add_option("--events", events_path, "input event stream");
    oracle->add_option("--gen-dense", gen_dense, "synthetic dense stream, T=<timesteps>");
    oracle->add_option("--stats-out", stats_out, "count stats file");
    oracle->add_option("--events-out", events_out, "fired spikes as an event stream");

    auto* compare = app.add_subcommand("compare",
                                       "check the engine against the golden model");
    compare->add_option("--config", config_path, "core parameter image");
    compare->add_option("--events", events_path, "input event stream");
    compare->add_option("--gen-dense", gen_dense, "synthetic dense stream");
    compare->add_option("--trials", trials, "randomized trial count");
    compare->add_option("--seed", seed, "trial seed");

    auto* bench = app.add_subcommand("bench", "peak-throughput workload");
    bench->add_option("--config", config_path, "core parameter image (default built-in)");
    bench->add_option("--gen-dense", gen_dense, "workload size, T=<timesteps> (default 10)");
    bench->add_option("--stats-out", stats_out, "stats file");
    bench->add_option("--clock", clock_hz, "clock frequency in Hz (default 667e6)");
    bench->add_option("--seed", seed, "generator seed");
    add_energy_flags(bench, energy);

    CLI11_PARSE(app, argc, argv);

    if (sim->parsed())
        return cmd_sim(config_path, events_path, gen_dense, stats_out, events_out,
                       chain_config, clock_hz, emit_empty_blocks, energy);
    if (oracle->parsed())
        return cmd_oracle(config_path, events_path, gen_dense, stats_out, events_out);
    if (compare->parsed())
        return cmd_compare(config_path, events_path, gen_dense, trials, seed);
    if (bench->parsed())
        return cmd_bench(config_path, gen_dense, stats_out, clock_hz, energy);
    return 1;
}
