#pragma once

#include <stdexcept>
#include <string>

namespace loki {

// Error categories. Mirrored one-to-one by the C API status codes.
enum class Err {
    InvalidArg,   // bad parameter (address out of range, bad leak exponent, ...)
    Io,           // file could not be opened / read / written
    Format,       // config image malformed (magic, version, size, field range)
    Parse,        // event stream text malformed
    Busy,         // core is mid-stream and cannot be reprogrammed
    State,        // operation on an unconfigured core or empty handle
    Timing,       // memory scheduling violation: bank busy, gating, collision
    Mismatch,     // compare given two different configurations
    ZeroDiv,      // throughput requested over zero measured cycles
    Internal,     // engine self-check failed
};

class SimError : public std::runtime_error {
public:
    SimError(Err code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string& what) {
    throw SimError(code, what);
}

} // namespace loki
