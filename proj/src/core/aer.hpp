#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loki {

// Input side: one event is either a spike at an 8-bit address or the time
// reference marker that ends the current timestep.
struct InputEvent {
    enum class Kind : std::uint8_t { Spike, TimeReference };

    Kind kind = Kind::TimeReference;
    std::uint8_t address = 0;   // meaningful for Spike only

    static InputEvent spike(unsigned address);   // validates [0, 255]
    static InputEvent time_reference() { return InputEvent{}; }

    bool is_spike() const { return kind == Kind::Spike; }
    bool operator==(const InputEvent&) const = default;
};

// Output side: one handshake carries a 3-bit group address and a 32-bit
// spike vector; bit i stands for neuron 32 * block_address + i.
struct BlockAerPacket {
    std::uint8_t block_address = 0;   // [0, 7]
    std::uint32_t spike_vector = 0;

    unsigned spike_count() const;
    bool operator==(const BlockAerPacket&) const = default;
};

constexpr unsigned kBlockCount = 8;

// Builds the packet for a set of neuron indices that all share one 32-neuron
// group. Mixed groups are an error. An empty set needs the group spelled out.
BlockAerPacket encode_block(const std::vector<unsigned>& spikes,
                            unsigned block_address_if_empty = 0);

// Ascending neuron indices encoded by the packet.
std::vector<unsigned> decode_block(const BlockAerPacket& p);

// ---------------------------------------------------------------------------
// Event stream text format, one event per line:
//   S <addr>        spike at input address 0..255 (decimal)
//   T               time reference (end of timestep)
//   B <blk> <hex8>  raw output packet log line; accepted and skipped on parse
//   # ...           comment; blank lines ignored
// ---------------------------------------------------------------------------

struct ParsedStream {
    std::vector<InputEvent> events;
    std::vector<std::string> warnings;
};

// Throws Err::Parse with a 1-based line number on malformed input.
ParsedStream parse_event_stream(const std::string& text);

// Canonical text for an event list: "S <addr>" / "T" lines, no comments.
std::string serialize_events(const std::vector<InputEvent>& events);

// Log form of one timestep's output: the raw packets as B lines followed by
// the decoded spikes and the closing time reference, so the file both records
// the handshakes and feeds straight into another core.
std::string serialize_packet_log(const std::vector<std::vector<BlockAerPacket>>& per_timestep);

// Decoded spikes of each timestep in ascending order, each timestep closed by
// a time reference; this chains one core's block AER output into the next.
std::vector<InputEvent> packets_to_events(
    const std::vector<std::vector<BlockAerPacket>>& per_timestep);

} // namespace loki
