#include <doctest.h>

#include "core/error.hpp"
#include "core/lif.hpp"

using namespace loki;

namespace {

// Independent oracle: do the sum in wide integers and clamp.
int widened_clamp(int v, int w) {
    int sum = v + w;
    if (sum > 127) return 127;
    if (sum < -128) return -128;
    return sum;
}

// Independent oracle: literal magnitude arithmetic, no shifts.
int leak_by_division(int v, unsigned k) {
    int magnitude = v < 0 ? -v : v;
    int decrement = magnitude / (1 << k);
    return v < 0 ? v + decrement : v - decrement;
}

} // namespace

TEST_CASE("integrate: examples") {
    CHECK(integrate(0, 7) == 7);
    CHECK(integrate(127, 7) == 127);      // widened sum 134 clamps high
    CHECK(integrate(-128, -8) == -128);   // widened sum -136 clamps low
}

TEST_CASE("integrate: exhaustive against the widened-clamp oracle") {
    for (int v = -128; v <= 127; ++v)
        for (int w = -8; w <= 7; ++w) {
            int got = integrate(static_cast<Potential>(v), static_cast<Weight>(w));
            CHECK(got == widened_clamp(v, w));
            CHECK(got >= -128);
            CHECK(got <= 127);
        }
}

TEST_CASE("leak: examples") {
    for (unsigned k = 0; k <= 7; ++k)
        CHECK(leak(0, LeakConfig::shift(k)) == 0);
    CHECK(leak(-1, LeakConfig::shift(4)) == -1);   // below leak resolution
    CHECK(leak(100, LeakConfig::shift(2)) == 75);  // 100 - 100/4
    for (int v = -128; v <= 127; ++v)
        CHECK(leak(static_cast<Potential>(v), LeakConfig::shift(0)) == 0);
}

TEST_CASE("leak: exhaustive against the division oracle, all configs") {
    for (int v = -128; v <= 127; ++v) {
        Potential p = static_cast<Potential>(v);
        CHECK(leak(p, LeakConfig::none()) == p);
        for (unsigned k = 0; k <= 7; ++k) {
            int got = leak(p, LeakConfig::shift(k));
            CHECK(got == leak_by_division(v, k));
            // moves toward zero, never through it
            CHECK(std::abs(got) <= std::abs(v));
            CHECK(got * v >= 0);
            // fixed point exactly when the magnitude is below resolution
            bool fixed = got == v;
            CHECK(fixed == (std::abs(v) < (1 << k)));
        }
    }
}

TEST_CASE("leak config validation") {
    CHECK_THROWS_AS(LeakConfig::shift(8), SimError);
    CHECK(LeakConfig::from_byte(0xff).is_none());
    CHECK(LeakConfig::from_byte(3).shift_amount() == 3);
}

TEST_CASE("fire_check: threshold is inclusive") {
    for (int th = -128; th <= 127; ++th) {
        Threshold t = static_cast<Threshold>(th);
        CHECK(fire_check(t, t));                          // v == th fires
        if (th > -128)
            CHECK_FALSE(fire_check(static_cast<Potential>(th - 1), t));
    }
    CHECK(fire_check(127, -128));
}

TEST_CASE("leak_fire_step: examples and exclusivity") {
    CHECK(leak_fire_step(50, 50, LeakConfig::shift(3)).fired);
    CHECK(leak_fire_step(50, 50, LeakConfig::shift(3)).potential == 0);

    auto r = leak_fire_step(49, 50, LeakConfig::shift(1));
    CHECK_FALSE(r.fired);
    CHECK(r.potential == leak(49, LeakConfig::shift(1)));

    auto sub = leak_fire_step(0, 1, LeakConfig::none());
    CHECK_FALSE(sub.fired);
    CHECK(sub.potential == 0);

    // a firing neuron is always reset; leak never applies to it
    for (int v = -128; v <= 127; ++v)
        for (int th : {-128, -1, 0, 1, 64, 127}) {
            auto step = leak_fire_step(static_cast<Potential>(v),
                                       static_cast<Threshold>(th),
                                       LeakConfig::shift(2));
            if (step.fired)
                CHECK(step.potential == 0);
            else
                CHECK(step.potential == leak(static_cast<Potential>(v),
                                             LeakConfig::shift(2)));
        }
}
