#include "core/aer.hpp"

#include <bit>
#include <cstdio>
#include <sstream>

#include "core/error.hpp"

namespace loki {

InputEvent InputEvent::spike(unsigned address) {
    if (address > 255)
        raise(Err::InvalidArg,
              "spike address " + std::to_string(address) + " out of range [0,255]");
    return InputEvent{Kind::Spike, static_cast<std::uint8_t>(address)};
}

unsigned BlockAerPacket::spike_count() const {
    return static_cast<unsigned>(std::popcount(spike_vector));
}

BlockAerPacket encode_block(const std::vector<unsigned>& spikes,
                            unsigned block_address_if_empty) {
    if (spikes.empty()) {
        if (block_address_if_empty >= kBlockCount)
            raise(Err::InvalidArg, "block address out of range [0,7]");
        return BlockAerPacket{static_cast<std::uint8_t>(block_address_if_empty), 0};
    }
    unsigned group = spikes.front() / 32;
    if (group >= kBlockCount)
        raise(Err::InvalidArg,
              "neuron index " + std::to_string(spikes.front()) + " out of range [0,255]");
    std::uint32_t vec = 0;
    for (unsigned idx : spikes) {
        if (idx / 32 != group)
            raise(Err::InvalidArg,
                  "neuron index " + std::to_string(idx) + " not in group " +
                  std::to_string(group) + "; one packet covers one 32-neuron group");
        vec |= 1u << (idx % 32);
    }
    return BlockAerPacket{static_cast<std::uint8_t>(group), vec};
}

std::vector<unsigned> decode_block(const BlockAerPacket& p) {
    std::vector<unsigned> out;
    out.reserve(p.spike_count());
    for (unsigned bit = 0; bit < 32; ++bit)
        if (p.spike_vector & (1u << bit))
            out.push_back(32u * p.block_address + bit);
    return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
    raise(Err::Parse, "line " + std::to_string(line_no) + ": " + why);
}

// Splits a line into whitespace-separated fields with comments stripped.
std::vector<std::string> fields_of(const std::string& line) {
    std::string body = line;
    if (auto hash = body.find('#'); hash != std::string::npos)
        body.resize(hash);
    std::vector<std::string> fields;
    std::istringstream in(body);
    std::string field;
    while (in >> field)
        fields.push_back(field);
    return fields;
}

unsigned parse_uint(const std::string& s, std::size_t line_no, const char* what,
                    unsigned max) {
    // digits only; stoul's tolerance for signs and whitespace is unwanted here
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        parse_fail(line_no, std::string("bad ") + what + " '" + s + "'");
    unsigned long value = 0;
    try {
        value = std::stoul(s, nullptr, 10);
    } catch (const std::exception&) {
        parse_fail(line_no, std::string("bad ") + what + " '" + s + "'");
    }
    if (value > max)
        parse_fail(line_no, std::string(what) + " " + s + " out of range [0," +
                               std::to_string(max) + "]");
    return static_cast<unsigned>(value);
}

} // namespace

ParsedStream parse_event_stream(const std::string& text) {
    ParsedStream out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = fields_of(line);
        if (fields.empty())
            continue;
        const std::string& tag = fields[0];
        if (tag == "S") {
            if (fields.size() != 2)
                parse_fail(line_no, "expected 'S <addr>'");
            out.events.push_back(InputEvent::spike(
                parse_uint(fields[1], line_no, "spike address", 255)));
        } else if (tag == "T") {
            if (fields.size() != 1)
                parse_fail(line_no, "unexpected text after 'T'");
            out.events.push_back(InputEvent::time_reference());
        } else if (tag == "B") {
            // packet log annotation: validate shape, carry no input meaning
            if (fields.size() != 3)
                parse_fail(line_no, "expected 'B <block> <hex vector>'");
            parse_uint(fields[1], line_no, "block address", 7);
            if (fields[2].size() != 8 ||
                fields[2].find_first_not_of("0123456789abcdef") != std::string::npos)
                parse_fail(line_no, "spike vector must be 8 lowercase hex digits");
        } else {
            parse_fail(line_no, "unknown event '" + tag + "'");
        }
    }
    if (!out.events.empty() && out.events.back().is_spike())
        out.warnings.push_back(
            "stream does not end with a time reference; trailing spikes are "
            "integrated but never pass leak-and-fire");
    return out;
}

std::string serialize_events(const std::vector<InputEvent>& events) {
    std::string out;
    for (const InputEvent& ev : events) {
        if (ev.is_spike()) {
            out += "S ";
            out += std::to_string(ev.address);
            out += '\n';
        } else {
            out += "T\n";
        }
    }
    return out;
}

std::string serialize_packet_log(
    const std::vector<std::vector<BlockAerPacket>>& per_timestep) {
    std::string out;
    char hex[16];
    for (const auto& packets : per_timestep) {
        for (const BlockAerPacket& p : packets) {
            std::snprintf(hex, sizeof hex, "B %u %08x\n", p.block_address, p.spike_vector);
            out += hex;
        }
        for (const BlockAerPacket& p : packets)
            for (unsigned idx : decode_block(p)) {
                out += "S ";
                out += std::to_string(idx);
                out += '\n';
            }
        out += "T\n";
    }
    return out;
}

std::vector<InputEvent> packets_to_events(
    const std::vector<std::vector<BlockAerPacket>>& per_timestep) {
    std::vector<InputEvent> out;
    for (const auto& packets : per_timestep) {
        for (const BlockAerPacket& p : packets)
            for (unsigned idx : decode_block(p))
                out.push_back(InputEvent::spike(idx));
        out.push_back(InputEvent::time_reference());
    }
    return out;
}

} // namespace loki
