#include <doctest.h>

#include <random>
#include <set>

#include "core/aer.hpp"
#include "core/error.hpp"

using namespace loki;

TEST_CASE("encode_block: examples") {
    CHECK(encode_block({}, 0) == BlockAerPacket{0, 0x00000000});
    CHECK(encode_block({37}) == BlockAerPacket{1, 0x00000020});

    std::vector<unsigned> top;
    for (unsigned i = 224; i < 256; ++i)
        top.push_back(i);
    CHECK(encode_block(top) == BlockAerPacket{7, 0xffffffff});

    CHECK_THROWS_AS(encode_block({5, 40}), SimError);   // groups 0 and 1 mixed
    CHECK_THROWS_AS(encode_block({256}), SimError);
}

TEST_CASE("decode_block: examples") {
    CHECK(decode_block(BlockAerPacket{0, 0}).empty());
    CHECK(decode_block(BlockAerPacket{1, 0x00000020}) == std::vector<unsigned>{37});
    CHECK(decode_block(BlockAerPacket{3, 0x80000001}) ==
          std::vector<unsigned>{96, 127});
}

TEST_CASE("encode/decode round-trip over random single-group sets") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        unsigned group = static_cast<unsigned>(rng() % 8);
        std::set<unsigned> picks;
        unsigned count = static_cast<unsigned>(rng() % 33);
        while (picks.size() < count)
            picks.insert(32 * group + static_cast<unsigned>(rng() % 32));
        std::vector<unsigned> spikes(picks.begin(), picks.end());
        BlockAerPacket p = encode_block(spikes, group);
        CHECK(p.block_address == group);
        CHECK(decode_block(p) == spikes);
        CHECK(p.spike_count() == spikes.size());
    }
}

TEST_CASE("parse: format definition") {
    ParsedStream s = parse_event_stream("S 12\nT\n");
    REQUIRE(s.events.size() == 2);
    CHECK(s.events[0] == InputEvent::spike(12));
    CHECK(s.events[1] == InputEvent::time_reference());
    CHECK(s.warnings.empty());
}

TEST_CASE("parse: errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_event_stream("S 300\n"),
                         doctest::Contains("line 1"), SimError);
    CHECK_THROWS_WITH_AS(parse_event_stream("S 1\nT\nX 4\n"),
                         doctest::Contains("line 3"), SimError);
    CHECK_THROWS_AS(parse_event_stream("S\n"), SimError);
    CHECK_THROWS_AS(parse_event_stream("T 1\n"), SimError);
    CHECK_THROWS_AS(parse_event_stream("S 12 13\n"), SimError);
    CHECK_THROWS_AS(parse_event_stream("S -1\n"), SimError);
    CHECK_THROWS_AS(parse_event_stream("S +5\n"), SimError);
    CHECK_THROWS_AS(parse_event_stream("S 0x10\n"), SimError);
}

TEST_CASE("parse: empty file, comments, annotations") {
    CHECK(parse_event_stream("").events.empty());
    CHECK(parse_event_stream("# nothing\n\n  \n").events.empty());

    // packet log lines are checked for shape but carry no input meaning
    ParsedStream s = parse_event_stream("B 1 00000020\nS 37\nT\n");
    REQUIRE(s.events.size() == 2);
    CHECK(s.events[0] == InputEvent::spike(37));
    CHECK_THROWS_AS(parse_event_stream("B 8 00000000\n"), SimError);
    CHECK_THROWS_AS(parse_event_stream("B 1 0000002G\n"), SimError);
}

TEST_CASE("parse: trailing spikes warn") {
    ParsedStream s = parse_event_stream("S 1\nS 2\n");
    CHECK(s.events.size() == 2);
    REQUIRE(s.warnings.size() == 1);
    CHECK(s.warnings[0].find("time reference") != std::string::npos);
}

TEST_CASE("serialize/parse round-trip") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<InputEvent> events;
        unsigned n = static_cast<unsigned>(rng() % 64);
        for (unsigned i = 0; i < n; ++i) {
            if (rng() % 4 == 0)
                events.push_back(InputEvent::time_reference());
            else
                events.push_back(InputEvent::spike(static_cast<unsigned>(rng() % 256)));
        }
        events.push_back(InputEvent::time_reference());
        CHECK(parse_event_stream(serialize_events(events)).events == events);
    }
}

TEST_CASE("packets_to_events") {
    std::vector<std::vector<BlockAerPacket>> one_ts = {{BlockAerPacket{1, 0x20}}};
    CHECK(packets_to_events(one_ts) ==
          std::vector<InputEvent>{InputEvent::spike(37), InputEvent::time_reference()});

    std::vector<std::vector<BlockAerPacket>> empty_ts = {{}};
    CHECK(packets_to_events(empty_ts) ==
          std::vector<InputEvent>{InputEvent::time_reference()});

    std::vector<std::vector<BlockAerPacket>> two = {{BlockAerPacket{0, 0x1}},
                                                    {BlockAerPacket{7, 0x80000000}}};
    CHECK(packets_to_events(two) ==
          std::vector<InputEvent>{InputEvent::spike(0), InputEvent::time_reference(),
                                  InputEvent::spike(255), InputEvent::time_reference()});
}

TEST_CASE("packet log is parseable and round-trips the decoded spikes") {
    std::vector<std::vector<BlockAerPacket>> per_ts = {
        {BlockAerPacket{1, 0x00000020}, BlockAerPacket{3, 0x80000001}},
        {},
    };
    std::string log = serialize_packet_log(per_ts);
    CHECK(log.find("B 1 00000020\n") != std::string::npos);
    CHECK(log.find("B 3 80000001\n") != std::string::npos);
    ParsedStream parsed = parse_event_stream(log);
    CHECK(parsed.events == packets_to_events(per_ts));
}
