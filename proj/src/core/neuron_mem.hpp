#pragma once

#include <array>
#include <cstdint>

#include "core/lif.hpp"

namespace loki {

// Dual-bank latch memory holding the 256 membrane potentials as 8 words of
// 32 neurons. Word g (neurons 32g .. 32g+31) lives in bank g mod 2 at index
// g div 2, so walking the words alternates banks and a read may overlap the
// previous word's write-back. Accesses complete in the same cycle; the only
// illegal pattern is two same-cycle accesses that need the same bank, or two
// same-cycle uses of the same port.
constexpr unsigned kNeuronCount    = 256;
constexpr unsigned kNeuronsPerWord = 32;
constexpr unsigned kNeuronWords    = kNeuronCount / kNeuronsPerWord;  // 8
constexpr unsigned kNeuronBanks    = 2;
constexpr unsigned kWordsPerBank   = kNeuronWords / kNeuronBanks;     // 4

using NeuronWord = std::array<Potential, kNeuronsPerWord>;

class NeuronMemory {
public:
    NeuronMemory();

    NeuronWord read(unsigned bank, unsigned word, std::uint64_t cycle);
    void write(unsigned bank, unsigned word, const NeuronWord& values, std::uint64_t cycle);

    // Untimed inspection / configuration.
    const NeuronWord& peek(unsigned bank, unsigned word) const;
    void zero();

private:
    struct PortUse {
        bool valid = false;
        std::uint64_t cycle = 0;
        unsigned bank = 0;
    };

    void check_index(unsigned bank, unsigned word) const;

    std::array<std::array<NeuronWord, kWordsPerBank>, kNeuronBanks> banks_{};
    PortUse last_read_;
    PortUse last_write_;
};

} // namespace loki
