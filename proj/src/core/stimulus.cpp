#include "core/stimulus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace loki {

namespace {

// splitmix64; decorrelates consecutive master seeds and trial indices
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// uniform draw in [0, n); n must divide 2^64 or be small enough that the
// modulo bias is irrelevant for stimulus generation
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

} // namespace

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    return mix64(master_seed ^ mix64(trial_index));
}

std::vector<InputEvent> dense_events(unsigned timesteps) {
    std::vector<InputEvent> out;
    out.reserve(static_cast<std::size_t>(timesteps) * (kInputCount + 1));
    for (unsigned t = 0; t < timesteps; ++t) {
        for (unsigned addr = 0; addr < kInputCount; ++addr)
            out.push_back(InputEvent::spike(addr));
        out.push_back(InputEvent::time_reference());
    }
    return out;
}

NetworkConfig bench_config() {
    NetworkConfig cfg;
    cfg.threshold = 1;
    cfg.leak = LeakConfig::none();
    return cfg;
}

NetworkConfig random_config(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    NetworkConfig cfg;
    for (auto& row : cfg.weights)
        for (auto& w : row)
            w = static_cast<Weight>(static_cast<int>(draw(rng, 16)) - 8);
    cfg.threshold = static_cast<Threshold>(1 + draw(rng, 127));
    std::uint64_t leak_pick = draw(rng, 9);
    cfg.leak = leak_pick == 0 ? LeakConfig::none()
                              : LeakConfig::shift(static_cast<unsigned>(leak_pick - 1));
    return cfg;
}

std::vector<InputEvent> random_events(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    unsigned timesteps = 1 + static_cast<unsigned>(draw(rng, 50));
    // spike density = 1 - sparsity, with sparsity uniform in [0, 0.99]
    double sparsity = 0.99 * static_cast<double>(draw(rng, 1u << 20)) /
                      static_cast<double>(1u << 20);
    double density = 1.0 - sparsity;

    std::vector<InputEvent> out;
    std::vector<unsigned> addresses(kInputCount);
    std::iota(addresses.begin(), addresses.end(), 0u);
    for (unsigned t = 0; t < timesteps; ++t) {
        std::shuffle(addresses.begin(), addresses.end(), rng);
        for (unsigned addr : addresses) {
            double u = static_cast<double>(rng() >> 11) * 0x1p-53;
            if (u < density)
                out.push_back(InputEvent::spike(addr));
        }
        out.push_back(InputEvent::time_reference());
    }
    return out;
}

} // namespace loki
