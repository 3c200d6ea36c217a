#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "core/lif.hpp"
#include "core/neuron_mem.hpp"

namespace loki {

constexpr unsigned kInputCount = 256;   // pre-synaptic addresses per core

// Full parameter set of one core, standing in for the serial programming
// interface: the 256 x 256 weight matrix plus the shared threshold and leak.
//
// Binary image layout (32777 bytes):
//   0..3   magic "LOKI"
//   4      version (1)
//   5      leak byte: 0xff = no leak, otherwise shift exponent k in [0,7]
//   6      threshold, two's-complement signed byte
//   7..8   reserved, must be zero
//   9..    32768-byte weight image: row-major over input address 0..255,
//          neuron 0..255 within a row, two weights per byte with the low
//          nibble holding the lower (even) neuron index, each nibble a
//          two's-complement 4-bit weight.
struct NetworkConfig {
    // weights[input_address][neuron]
    std::array<std::array<Weight, kNeuronCount>, kInputCount> weights{};
    Threshold threshold = 0;
    LeakConfig leak = LeakConfig::none();
    double clock_hz = 667e6;   // runtime parameter, not part of the image

    bool operator==(const NetworkConfig& other) const {
        return weights == other.weights && threshold == other.threshold &&
               leak == other.leak;
    }
};

constexpr std::size_t kWeightImageBytes = 32768;
constexpr std::size_t kConfigImageBytes = 9 + kWeightImageBytes;

NetworkConfig load_config(const std::vector<std::uint8_t>& bytes);
NetworkConfig load_config_file(const std::string& path);

std::vector<std::uint8_t> save_config(const NetworkConfig& cfg);
void save_config_file(const NetworkConfig& cfg, const std::string& path);

} // namespace loki
