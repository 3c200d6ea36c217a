#include "core/config.hpp"

#include <cstdio>
#include <fstream>

#include "core/error.hpp"

namespace loki {

namespace {

constexpr std::uint8_t kMagic[4] = {'L', 'O', 'K', 'I'};
constexpr std::uint8_t kVersion = 1;

Weight nibble_to_weight(std::uint8_t nibble) {
    return static_cast<Weight>((nibble & 0x8u) ? static_cast<int>(nibble) - 16
                                               : static_cast<int>(nibble));
}

} // namespace

NetworkConfig load_config(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() != kConfigImageBytes)
        raise(Err::Format,
              "config image is " + std::to_string(bytes.size()) + " bytes, expected " +
              std::to_string(kConfigImageBytes));
    for (unsigned i = 0; i < 4; ++i)
        if (bytes[i] != kMagic[i])
            raise(Err::Format, "bad magic; not a core parameter image");
    if (bytes[4] != kVersion)
        raise(Err::Format,
              "unsupported image version " + std::to_string(bytes[4]) + ", expected " +
              std::to_string(kVersion));

    NetworkConfig cfg;
    if (bytes[5] != LeakConfig::kNoLeakByte && bytes[5] > LeakConfig::kMaxShift)
        raise(Err::Format,
              "leak byte " + std::to_string(bytes[5]) + " invalid: expected 0..7 or 0xff");
    cfg.leak = LeakConfig::from_byte(bytes[5]);
    cfg.threshold = static_cast<Threshold>(bytes[6]);
    if (bytes[7] != 0 || bytes[8] != 0)
        raise(Err::Format, "reserved bytes must be zero");

    const std::uint8_t* image = bytes.data() + 9;
    for (unsigned addr = 0; addr < kInputCount; ++addr)
        for (unsigned neuron = 0; neuron < kNeuronCount; ++neuron) {
            std::uint8_t byte = image[addr * (kNeuronCount / 2) + neuron / 2];
            std::uint8_t nib = (neuron & 1u) ? (byte >> 4) : (byte & 0x0fu);
            cfg.weights[addr][neuron] = nibble_to_weight(nib);
        }
    return cfg;
}

NetworkConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(Err::Io, "cannot open config file '" + path + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return load_config(bytes);
}

std::vector<std::uint8_t> save_config(const NetworkConfig& cfg) {
    std::vector<std::uint8_t> bytes(kConfigImageBytes, 0);
    bytes[0] = kMagic[0];
    bytes[1] = kMagic[1];
    bytes[2] = kMagic[2];
    bytes[3] = kMagic[3];
    bytes[4] = kVersion;
    bytes[5] = cfg.leak.raw;
    bytes[6] = static_cast<std::uint8_t>(cfg.threshold);
    // bytes 7..8 reserved, already zero
    std::uint8_t* image = bytes.data() + 9;
    for (unsigned addr = 0; addr < kInputCount; ++addr)
        for (unsigned neuron = 0; neuron < kNeuronCount; ++neuron) {
            int w = cfg.weights[addr][neuron];
            if (w < kWeightMin || w > kWeightMax)
                raise(Err::InvalidArg,
                      "weight " + std::to_string(w) + " at (" + std::to_string(addr) +
                      ", " + std::to_string(neuron) + ") out of range [-8,7]");
            std::uint8_t nib = static_cast<std::uint8_t>(w) & 0x0fu;
            std::uint8_t& byte = image[addr * (kNeuronCount / 2) + neuron / 2];
            if (neuron & 1u)
                byte |= static_cast<std::uint8_t>(nib << 4);
            else
                byte |= nib;
        }
    return bytes;
}

void save_config_file(const NetworkConfig& cfg, const std::string& path) {
    auto bytes = save_config(cfg);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        raise(Err::Io, "cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        raise(Err::Io, "short write to '" + path + "'");
}

} // namespace loki
