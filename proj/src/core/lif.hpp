#pragma once

#include <cstdint>

namespace loki {

// Quantized LIF arithmetic for one neuron. Membrane potentials are 8-bit
// signed integers, synaptic weights 4-bit signed integers. All operations
// are pure and saturating; nothing here ever wraps.

using Potential = std::int8_t;   // [-128, 127]
using Weight    = std::int8_t;   // [-8, 7]

constexpr int kPotentialMin = -128;
constexpr int kPotentialMax = 127;
constexpr int kWeightMin    = -8;
constexpr int kWeightMax    = 7;

using Threshold = std::int8_t;   // shared by all neurons of a core

// Decay factor alpha = 1 - 2^-k, realized as a right shift of the magnitude.
// k = 0 means alpha = 0 (full decay each timestep); the sentinel byte 0xff
// disables leakage entirely (alpha = 1). k above 7 is rejected: an 8-bit
// magnitude never reaches 2^8, so larger exponents only alias NoLeak.
struct LeakConfig {
    static constexpr std::uint8_t kNoLeakByte = 0xff;
    static constexpr unsigned     kMaxShift   = 7;

    std::uint8_t raw = kNoLeakByte;

    static LeakConfig none() { return LeakConfig{kNoLeakByte}; }
    static LeakConfig shift(unsigned k);     // throws InvalidArg if k > 7
    static LeakConfig from_byte(std::uint8_t b);

    bool is_none() const { return raw == kNoLeakByte; }
    unsigned shift_amount() const { return raw; }  // valid only if !is_none()

    bool operator==(const LeakConfig&) const = default;
};

// clamp(v + w, -128, 127). One call is one SOP.
Potential integrate(Potential v, Weight w);

// NoLeak returns v. Shift(k) returns v - sign(v) * floor(|v| / 2^k):
// the shift acts on the magnitude, so decay is symmetric around zero and
// never flips the sign. Values with |v| < 2^k are fixed points.
Potential leak(Potential v, LeakConfig cfg);

// True iff v >= th. A potential exactly at threshold fires.
bool fire_check(Potential v, Threshold th);

struct LeakFireResult {
    Potential potential;
    bool fired;
};

// One end-of-timestep step for one neuron: fire-and-reset, or leak.
// The two are mutually exclusive; a firing neuron is never leaked.
LeakFireResult leak_fire_step(Potential v, Threshold th, LeakConfig cfg);

} // namespace loki
