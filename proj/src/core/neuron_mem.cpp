#include "core/neuron_mem.hpp"

#include <string>

#include "core/error.hpp"

namespace loki {

NeuronMemory::NeuronMemory() = default;

void NeuronMemory::check_index(unsigned bank, unsigned word) const {
    if (bank >= kNeuronBanks || word >= kWordsPerBank)
        raise(Err::InvalidArg,
              "neuron memory index (bank " + std::to_string(bank) + ", word " +
              std::to_string(word) + ") out of range");
}

NeuronWord NeuronMemory::read(unsigned bank, unsigned word, std::uint64_t cycle) {
    check_index(bank, word);
    if (last_read_.valid && last_read_.cycle == cycle)
        raise(Err::Timing,
              "second neuron memory read in cycle " + std::to_string(cycle));
    if (last_write_.valid && last_write_.cycle == cycle && last_write_.bank == bank)
        raise(Err::Timing,
              "neuron memory bank " + std::to_string(bank) +
              " read while written in cycle " + std::to_string(cycle));
    last_read_ = {true, cycle, bank};
    return banks_[bank][word];
}

void NeuronMemory::write(unsigned bank, unsigned word, const NeuronWord& values,
                         std::uint64_t cycle) {
    check_index(bank, word);
    if (last_write_.valid && last_write_.cycle == cycle)
        raise(Err::Timing,
              "second neuron memory write in cycle " + std::to_string(cycle));
    if (last_read_.valid && last_read_.cycle == cycle && last_read_.bank == bank)
        raise(Err::Timing,
              "neuron memory bank " + std::to_string(bank) +
              " written while read in cycle " + std::to_string(cycle));
    last_write_ = {true, cycle, bank};
    banks_[bank][word] = values;
}

const NeuronWord& NeuronMemory::peek(unsigned bank, unsigned word) const {
    check_index(bank, word);
    return banks_[bank][word];
}

void NeuronMemory::zero() {
    banks_ = {};
    last_read_ = {};
    last_write_ = {};
}

} // namespace loki
