#include "core/lif.hpp"

#include <cstdlib>
#include <string>

#include "core/error.hpp"

namespace loki {

LeakConfig LeakConfig::shift(unsigned k) {
    if (k > kMaxShift)
        raise(Err::InvalidArg, "leak exponent " + std::to_string(k) + " out of range [0,7]");
    return LeakConfig{static_cast<std::uint8_t>(k)};
}

LeakConfig LeakConfig::from_byte(std::uint8_t b) {
    if (b == kNoLeakByte)
        return none();
    return shift(b);
}

Potential integrate(Potential v, Weight w) {
    int sum = static_cast<int>(v) + static_cast<int>(w);
    if (sum > kPotentialMax) sum = kPotentialMax;
    if (sum < kPotentialMin) sum = kPotentialMin;
    return static_cast<Potential>(sum);
}

Potential leak(Potential v, LeakConfig cfg) {
    if (cfg.is_none())
        return v;
    int magnitude = std::abs(static_cast<int>(v));
    int decrement = magnitude >> cfg.shift_amount();
    return static_cast<Potential>(v < 0 ? v + decrement : v - decrement);
}

bool fire_check(Potential v, Threshold th) {
    return v >= th;
}

LeakFireResult leak_fire_step(Potential v, Threshold th, LeakConfig cfg) {
    if (fire_check(v, th))
        return {0, true};
    return {leak(v, cfg), false};
}

} // namespace loki
