#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "core/golden.hpp"
#include "core/stimulus.hpp"

using namespace loki;

TEST_CASE("golden: silent on no input") {
    GoldenSim golden(bench_config());
    auto fired = golden.end_timestep();
    CHECK(fired.empty());
    for (auto v : golden.potentials())
        CHECK(v == 0);
}

TEST_CASE("golden: one spike at full weight fires all neurons at threshold") {
    NetworkConfig cfg;
    for (unsigned i = 0; i < 256; ++i)
        cfg.weights[9][i] = 7;
    cfg.threshold = 7;
    GoldenSim golden(cfg);
    std::vector<unsigned> spikes = {9};
    auto fired = golden.timestep(spikes);
    CHECK(fired.size() == 256);   // 0 + 7 >= 7: the threshold is inclusive
    for (auto v : golden.potentials())
        CHECK(v == 0);
}

// Third implementation at tiny scale: 16 inputs x 16 neurons simulated with
// straight-line loops, checked against the golden model on the same netlist.
TEST_CASE("golden: matches an exhaustive hand simulation of a 16x16 block") {
    std::mt19937_64 rng(4242);
    NetworkConfig cfg;
    int hand_w[16][16];
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned n = 0; n < 16; ++n) {
            int w = static_cast<int>(rng() % 16) - 8;
            hand_w[a][n] = w;
            cfg.weights[a][n] = static_cast<Weight>(w);
        }
    cfg.threshold = 5;
    cfg.leak = LeakConfig::shift(1);

    int hand_v[16] = {0};
    GoldenSim golden(cfg);

    for (unsigned t = 0; t < 20; ++t) {
        std::vector<unsigned> spikes;
        for (unsigned a = 0; a < 16; ++a)
            if (rng() % 2)
                spikes.push_back(a);

        for (unsigned a : spikes) {
            golden.integrate_spike(a);
            for (unsigned n = 0; n < 16; ++n) {
                hand_v[n] += hand_w[a][n];
                if (hand_v[n] > 127) hand_v[n] = 127;
                if (hand_v[n] < -128) hand_v[n] = -128;
            }
        }

        auto fired = golden.end_timestep();
        std::vector<unsigned> hand_fired;
        for (unsigned n = 0; n < 16; ++n) {
            if (hand_v[n] >= 5) {
                hand_fired.push_back(n);
                hand_v[n] = 0;
            } else {
                int mag = hand_v[n] < 0 ? -hand_v[n] : hand_v[n];
                mag -= mag / 2;
                hand_v[n] = hand_v[n] < 0 ? -mag : mag;
            }
        }

        std::vector<unsigned> fired_low;
        for (unsigned n : fired)
            if (n < 16)
                fired_low.push_back(n);
        CHECK(fired_low == hand_fired);

        auto pots = golden.potentials();
        for (unsigned n = 0; n < 16; ++n)
            CHECK(pots[n] == hand_v[n]);
    }
}

TEST_CASE("compare_trajectories: identical runs are bit-exact") {
    std::vector<std::vector<unsigned>> fires = {{1, 2}, {}, {200}};
    std::array<std::int8_t, 256> pots{};
    pots[4] = -3;
    CompareVerdict v = compare_trajectories(fires, fires, pots, pots);
    CHECK(v.bit_exact);
}

TEST_CASE("compare_trajectories: localizes an injected divergence") {
    std::vector<std::vector<unsigned>> a = {{1, 2}, {40}, {200}};
    std::vector<std::vector<unsigned>> b = {{1, 2}, {40, 41}, {200}};
    std::array<std::int8_t, 256> pots{};
    CompareVerdict v = compare_trajectories(a, b, pots, pots);
    CHECK_FALSE(v.bit_exact);
    CHECK(v.timestep == 1);
    CHECK(v.neuron == 41);

    std::array<std::int8_t, 256> other = pots;
    other[77] = 1;   // off-by-one final potential, fire sets equal
    CompareVerdict w = compare_trajectories(a, a, pots, other);
    CHECK_FALSE(w.bit_exact);
    CHECK(w.timestep == -1);
    CHECK(w.neuron == 77);
}

TEST_CASE("compare_runs: engine and oracle agree on random trials") {
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        NetworkConfig cfg = random_config(trial_seed(123, 2 * trial));
        auto events = random_events(trial_seed(123, 2 * trial + 1));
        CompareVerdict v = compare_runs(cfg, cfg, events);
        INFO("trial ", trial, ": ", v.detail);
        CHECK(v.bit_exact);
    }
}

TEST_CASE("compare_runs: different configurations are a mismatch error") {
    NetworkConfig a = random_config(1);
    NetworkConfig b = random_config(2);
    std::vector<InputEvent> events = {InputEvent::time_reference()};
    CHECK_THROWS_AS(compare_runs(a, b, events), SimError);
}

TEST_CASE("golden: trailing spikes integrate without a leak-fire pass") {
    NetworkConfig cfg;
    cfg.weights[0][0] = 3;
    cfg.threshold = 100;
    cfg.leak = LeakConfig::shift(0);   // full decay, would zero everything
    GoldenSim golden(cfg);
    std::vector<InputEvent> events = {InputEvent::spike(0)};
    golden.run(events);
    CHECK(golden.potentials()[0] == 3);
}
