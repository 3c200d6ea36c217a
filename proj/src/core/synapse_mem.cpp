#include "core/synapse_mem.hpp"

#include <string>

#include "core/error.hpp"

namespace loki {

SynapseAddress SynapseAddress::decode(unsigned raw) {
    if (raw >= kSynapseWords)
        raise(Err::InvalidArg,
              "synapse word address " + std::to_string(raw) + " out of range [0,2047]");
    return SynapseAddress{static_cast<std::uint16_t>(raw)};
}

PackedWord pack_word(const WeightWord& weights) {
    PackedWord out{};
    for (unsigned i = 0; i < kWeightsPerWord; ++i) {
        int w = weights[i];
        if (w < kWeightMin || w > kWeightMax)
            raise(Err::InvalidArg,
                  "weight " + std::to_string(w) + " at lane " + std::to_string(i) +
                  " out of range [-8,7]");
        std::uint8_t nibble = static_cast<std::uint8_t>(w) & 0x0fu;
        if (i & 1u)
            out[i >> 1] |= static_cast<std::uint8_t>(nibble << 4);
        else
            out[i >> 1] |= nibble;
    }
    return out;
}

WeightWord unpack_word(const PackedWord& bits) {
    WeightWord out{};
    for (unsigned i = 0; i < kWeightsPerWord; ++i) {
        std::uint8_t nibble = (i & 1u) ? (bits[i >> 1] >> 4) : (bits[i >> 1] & 0x0fu);
        // sign-extend the 4-bit two's-complement nibble
        int w = (nibble & 0x8u) ? static_cast<int>(nibble) - 16 : static_cast<int>(nibble);
        out[i] = static_cast<Weight>(w);
    }
    return out;
}

MccgMemory::MccgMemory() = default;

void MccgMemory::issue_read(SynapseAddress addr, std::uint64_t cycle) {
    BankState& bank = banks_[addr.bank()];
    if (bank.issue_cycle)
        raise(Err::Timing,
              "bank " + std::to_string(addr.bank()) + " busy: access issued at cycle " +
              std::to_string(*bank.issue_cycle) + " not yet collected (new issue at cycle " +
              std::to_string(cycle) + ")");
    if (bank.ever_enabled && cycle < bank.last_enable + kMccgEnableSpacing)
        raise(Err::Timing,
              "gating violation: bank " + std::to_string(addr.bank()) +
              " enabled at cycle " + std::to_string(bank.last_enable) +
              " and again at cycle " + std::to_string(cycle) +
              " (minimum spacing " + std::to_string(kMccgEnableSpacing) + ")");
    bank.issue_cycle = cycle;
    bank.inflight_row = addr.row();
    bank.ever_enabled = true;
    bank.last_enable = cycle;
}

WeightWord MccgMemory::collect_read(unsigned bank_index, std::uint64_t cycle) {
    if (bank_index >= kSynapseBanks)
        raise(Err::InvalidArg, "bank index " + std::to_string(bank_index) + " out of range");
    BankState& bank = banks_[bank_index];
    if (!bank.issue_cycle)
        raise(Err::Timing,
              "collect on bank " + std::to_string(bank_index) + " with nothing outstanding");
    if (cycle < *bank.issue_cycle + kMccgLatency)
        raise(Err::Timing,
              "collect on bank " + std::to_string(bank_index) + " at cycle " +
              std::to_string(cycle) + " before data is ready (issued at cycle " +
              std::to_string(*bank.issue_cycle) + ", latency " +
              std::to_string(kMccgLatency) + ")");
    std::uint64_t raw = bank.inflight_row * kSynapseBanks + bank_index;
    bank.issue_cycle.reset();
    return words_[raw];
}

bool MccgMemory::has_inflight(unsigned bank_index) const {
    return bank_index < kSynapseBanks && banks_[bank_index].issue_cycle.has_value();
}

void MccgMemory::load_word(SynapseAddress addr, const WeightWord& w) {
    words_[addr.raw] = w;
}

const WeightWord& MccgMemory::peek_word(SynapseAddress addr) const {
    return words_[addr.raw];
}

void MccgMemory::clear() {
    words_ = {};
    banks_ = {};
}

} // namespace loki
