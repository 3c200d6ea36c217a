#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "core/lif.hpp"

namespace loki {

// Synapse memory geometry: 256 x 256 4-bit weights = 2048 words of 32
// weights each, spread over 4 banks. The bank is the 2 LSBs of the word
// address, the row the 9 MSBs, so sequential addresses walk the banks
// round-robin.
constexpr unsigned kSynapseWords     = 2048;
constexpr unsigned kSynapseBanks     = 4;
constexpr unsigned kSynapseRows      = kSynapseWords / kSynapseBanks;
constexpr unsigned kWeightsPerWord   = 32;
constexpr unsigned kMccgLatency      = 4;   // cycles from issue to collect
constexpr unsigned kMccgEnableSpacing = 4;  // min cycles between bank enables

struct SynapseAddress {
    std::uint16_t raw = 0;

    // Validates raw in [0, 2047].
    static SynapseAddress decode(unsigned raw);

    unsigned bank() const { return raw & 0x3u; }
    unsigned row() const { return raw >> 2; }
};

using WeightWord = std::array<Weight, kWeightsPerWord>;   // 32 x 4-bit
using PackedWord = std::array<std::uint8_t, 16>;          // 128 bits

// Weight i occupies bits [4i, 4i+3] as a two's-complement nibble: the low
// nibble of byte j holds weight 2j, the high nibble weight 2j+1.
PackedWord pack_word(const WeightWord& weights);          // throws on range
WeightWord unpack_word(const PackedWord& bits);

// Cycle-accurate model of the 4-bank multi-cycle clock-gated synapse SRAM.
// Each bank's clock may be enabled at most once every 4 cycles and a read
// spans 4 cycles, so issuing sequential addresses one per cycle keeps every
// bank inside its relaxed timing window while the array as a whole delivers
// one word per cycle. Scheduling violations are reported as errors, never
// reordered: they indicate a bug in whoever drives the memory.
//
// A collect and a fresh issue may legally share a cycle on the same bank;
// the collect is ordered first (the data leaves the latched output before
// the next address is captured).
class MccgMemory {
public:
    MccgMemory();

    // Timed access path.
    void issue_read(SynapseAddress addr, std::uint64_t cycle);
    WeightWord collect_read(unsigned bank, std::uint64_t cycle);

    bool has_inflight(unsigned bank) const;

    // Untimed configuration path; only legal while the pipeline is idle.
    void load_word(SynapseAddress addr, const WeightWord& w);
    const WeightWord& peek_word(SynapseAddress addr) const;
    void clear();

private:
    struct BankState {
        std::optional<std::uint64_t> issue_cycle;  // at most one outstanding
        std::uint64_t inflight_row = 0;
        bool ever_enabled = false;
        std::uint64_t last_enable = 0;
    };

    std::array<WeightWord, kSynapseWords> words_{};
    std::array<BankState, kSynapseBanks> banks_{};
};

} // namespace loki
