#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "core/synapse_mem.hpp"
#include "core/neuron_mem.hpp"

using namespace loki;

namespace {

WeightWord word_pattern(unsigned tag) {
    WeightWord w;
    for (unsigned i = 0; i < kWeightsPerWord; ++i)
        w[i] = static_cast<Weight>(static_cast<int>((tag + 3 * i) % 16) - 8);
    return w;
}

} // namespace

TEST_CASE("synapse address decode") {
    CHECK(SynapseAddress::decode(0).bank() == 0);
    CHECK(SynapseAddress::decode(0).row() == 0);
    CHECK(SynapseAddress::decode(5).bank() == 1);
    CHECK(SynapseAddress::decode(5).row() == 1);
    CHECK(SynapseAddress::decode(2047).bank() == 3);
    CHECK(SynapseAddress::decode(2047).row() == 511);
    CHECK_THROWS_AS(SynapseAddress::decode(2048), SimError);
}

TEST_CASE("weight word packing") {
    WeightWord zeros{};
    PackedWord packed = pack_word(zeros);
    for (auto byte : packed)
        CHECK(byte == 0);

    WeightWord one{};
    one[0] = -1;
    packed = pack_word(one);
    CHECK(packed[0] == 0x0f);   // two's-complement nibble 1111 in bits 0..3
    for (unsigned i = 1; i < packed.size(); ++i)
        CHECK(packed[i] == 0);

    // odd lane lands in the high nibble
    WeightWord odd{};
    odd[1] = -8;
    CHECK(pack_word(odd)[0] == 0x80);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        WeightWord w;
        for (auto& x : w)
            x = static_cast<Weight>(static_cast<int>(rng() % 16) - 8);
        CHECK(unpack_word(pack_word(w)) == w);

        PackedWord bits;
        for (auto& b : bits)
            b = static_cast<std::uint8_t>(rng());
        CHECK(pack_word(unpack_word(bits)) == bits);
    }

    WeightWord bad{};
    bad[5] = 8;
    CHECK_THROWS_AS(pack_word(bad), SimError);
}

TEST_CASE("mccg: sequential addresses hit distinct banks legally") {
    MccgMemory mem;
    for (unsigned a = 0; a < 4; ++a)
        mem.issue_read(SynapseAddress::decode(a), a);   // banks 0,1,2,3
    for (unsigned a = 0; a < 4; ++a)
        mem.collect_read(a, a + 4);
}

TEST_CASE("mccg: same bank within 4 cycles is a gating violation") {
    MccgMemory mem;
    mem.issue_read(SynapseAddress::decode(0), 0);
    CHECK_THROWS_AS(mem.issue_read(SynapseAddress::decode(4), 1), SimError);
}

TEST_CASE("mccg: exactly 4 cycles apart is legal") {
    MccgMemory mem;
    mem.issue_read(SynapseAddress::decode(0), 0);
    mem.collect_read(0, 4);
    mem.issue_read(SynapseAddress::decode(4), 4);   // collect before issue
    mem.collect_read(0, 8);
}

TEST_CASE("mccg: issue while outstanding is bank-busy") {
    MccgMemory mem;
    mem.issue_read(SynapseAddress::decode(0), 0);
    CHECK_THROWS_AS(mem.issue_read(SynapseAddress::decode(4), 4), SimError);
}

TEST_CASE("mccg: collect timing") {
    MccgMemory mem;
    WeightWord w = word_pattern(7);
    mem.load_word(SynapseAddress::decode(0), w);

    mem.issue_read(SynapseAddress::decode(0), 0);
    CHECK_THROWS_AS(mem.collect_read(0, 3), SimError);   // not ready
    CHECK(mem.collect_read(0, 4) == w);
    CHECK_THROWS_AS(mem.collect_read(0, 5), SimError);   // nothing outstanding
}

TEST_CASE("mccg: round-robin delivers the flat-memory sequence, one word per cycle") {
    MccgMemory mem;
    std::array<WeightWord, kSynapseWords> flat;
    for (unsigned a = 0; a < kSynapseWords; ++a) {
        flat[a] = word_pattern(a);
        mem.load_word(SynapseAddress::decode(a), flat[a]);
    }
    // issue address a at cycle a; its data is due at cycle a+4
    for (std::uint64_t cycle = 0; cycle < kSynapseWords + 4; ++cycle) {
        if (cycle >= 4) {
            unsigned a = static_cast<unsigned>(cycle - 4);
            CHECK(mem.collect_read(a & 3, cycle) == flat[a]);
        }
        if (cycle < kSynapseWords)
            mem.issue_read(SynapseAddress::decode(static_cast<unsigned>(cycle)), cycle);
    }
}

TEST_CASE("neuron memory: fresh words read zero") {
    NeuronMemory mem;
    for (unsigned bank = 0; bank < kNeuronBanks; ++bank)
        for (unsigned word = 0; word < kWordsPerBank; ++word)
            for (auto v : mem.read(bank, word, bank * kWordsPerBank + word))
                CHECK(v == 0);
}

TEST_CASE("neuron memory: simultaneous read/write on distinct banks") {
    NeuronMemory mem;
    NeuronWord vals{};
    vals[0] = 42;
    mem.write(1, 0, vals, 10);
    CHECK(mem.read(0, 0, 10)[0] == 0);   // same cycle, other bank
    CHECK(mem.read(1, 0, 11) == vals);
}

TEST_CASE("neuron memory: same-bank same-cycle collisions") {
    NeuronMemory mem;
    NeuronWord vals{};
    mem.read(0, 0, 5);
    CHECK_THROWS_AS(mem.write(0, 1, vals, 5), SimError);   // write after read
    mem.write(1, 0, vals, 6);
    CHECK_THROWS_AS(mem.read(1, 2, 6), SimError);          // read after write
    mem.read(0, 0, 7);
    CHECK_THROWS_AS(mem.read(1, 0, 7), SimError);          // one read port
}

TEST_CASE("neuron memory: round-trip and last write wins") {
    NeuronMemory mem;
    std::uint64_t cycle = 0;
    for (unsigned bank = 0; bank < kNeuronBanks; ++bank)
        for (unsigned word = 0; word < kWordsPerBank; ++word) {
            NeuronWord vals;
            for (unsigned i = 0; i < kNeuronsPerWord; ++i)
                vals[i] = static_cast<Potential>(
                    static_cast<int>((bank * 100 + word * 10 + i) % 256) - 128);
            mem.write(bank, word, vals, cycle++);
            CHECK(mem.read(bank, word, cycle++) == vals);
        }

    NeuronWord first{};
    first[3] = 1;
    NeuronWord second{};
    second[3] = 2;
    mem.write(0, 2, first, cycle++);
    mem.write(0, 2, second, cycle++);
    CHECK(mem.read(0, 2, cycle)[3] == 2);
}
