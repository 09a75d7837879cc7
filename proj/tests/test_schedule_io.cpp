#include <doctest.h>

#include "decoupling/schedule_io.hpp"

using namespace decoupling;

TEST_CASE("serialization is canonical and byte-stable") {
    const PulseSchedule s = compile_qubit_network(5);
    const std::string a = schedule_to_json(s, true);
    const std::string b = schedule_to_json(compile_qubit_network(5), true);
    CHECK(a == b);
    CHECK(a.find("\"version\": \"1\"") != std::string::npos);
    CHECK(a.find("\"scenario\": \"qubit-network\"") != std::string::npos);
    CHECK(a.find("\"sequence\": [0,1,0,2,0,1,0,3,0,1,0,2,0,1,0,3]") != std::string::npos);

    // parse -> reserialize round-trips to identical bytes
    const ScheduleDocument doc = schedule_from_json(a);
    CHECK(schedule_to_json(doc.schedule, true) == a);
    CHECK_FALSE(doc.times.has_value());
}

TEST_CASE("frames are reconstructed when omitted and honored when present") {
    const PulseSchedule s = compile_bipartite(2);
    const ScheduleDocument no_frames = schedule_from_json(schedule_to_json(s, false));
    CHECK(no_frames.schedule.frames == s.frames);
    const ScheduleDocument with_frames = schedule_from_json(schedule_to_json(s, true));
    CHECK(with_frames.schedule.frames == s.frames);
    CHECK(with_frames.schedule.pulses == s.pulses);
    CHECK(with_frames.schedule.sequence == s.sequence);
}

TEST_CASE("qudit schedules carry alpha") {
    const PulseSchedule s = compile_qudit_network(3, 2);
    const std::string text = schedule_to_json(s, false);
    CHECK(text.find("\"alpha\": 2") != std::string::npos);
    const ScheduleDocument doc = schedule_from_json(text);
    CHECK(doc.schedule.spec == NodeSpec{6, 2});
    CHECK(doc.schedule.block == 2);
    CHECK(doc.schedule.logical_dim == 4);
    CHECK(doc.schedule.frames == s.frames);
}

TEST_CASE("structural validation") {
    const std::string good = schedule_to_json(compile_single_node(2), false);

    auto corrupt = [&](const std::string& from, const std::string& to) {
        std::string text = good;
        const auto pos = text.find(from);
        REQUIRE(pos != std::string::npos);
        text.replace(pos, from.size(), to);
        return text;
    };

    CHECK_THROWS(schedule_from_json("not json"));
    CHECK_THROWS(schedule_from_json("[1,2,3]"));
    CHECK_THROWS(schedule_from_json(corrupt("\"version\": \"1\"", "\"version\": \"2\"")));
    CHECK_THROWS(schedule_from_json(corrupt("\"scenario\": \"single\"", "\"scenario\": \"x\"")));
    CHECK_THROWS(schedule_from_json(corrupt("\"n\": 1", "\"n\": 2")));
    CHECK_THROWS(schedule_from_json(corrupt("\"N\": 4", "\"N\": 5")));          // sequence length
    CHECK_THROWS(schedule_from_json(corrupt("[0,1,0,1]", "[0,1,0,7]")));        // unknown pulse id
    CHECK_THROWS(schedule_from_json(corrupt("\"labels\": [[1,0]]", "\"labels\": [[2,0]]")));
    CHECK_THROWS(schedule_from_json(corrupt("{\"id\": 1,", "{\"id\": 0,")));    // duplicate id
    CHECK_THROWS(schedule_from_json(corrupt("\"times\": \"uniform\"", "\"times\": \"linear\"")));
    CHECK_THROWS(schedule_from_json(corrupt("\"times\": \"uniform\"", "\"times\": [1,1]")));
    CHECK_NOTHROW(schedule_from_json(corrupt("\"times\": \"uniform\"", "\"times\": [1,1,1,1]")));
    CHECK_THROWS(schedule_from_json(corrupt("\"times\": \"uniform\"", "\"times\": [1,1,1,0]")));
}

TEST_CASE("a tampered sequence fails verification with a witness") {
    const std::string good = schedule_to_json(compile_single_node(2), false);
    std::string bad = good;
    const auto pos = bad.find("[0,1,0,1]");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 9, "[0,1,0,0]");

    const ScheduleDocument doc = schedule_from_json(bad);
    const VerifyReport report = run_verification(doc.schedule, {1}, 1e-10, VerifyMode::automatic);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.detail.empty());
}

TEST_CASE("in-memory and round-tripped verification reports agree byte for byte") {
    const PulseSchedule s = compile_qubit_network(5);
    const std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    const VerifyReport direct = run_verification(s, seeds, 1e-10, VerifyMode::automatic);
    const ScheduleDocument doc = schedule_from_json(schedule_to_json(s, true));
    const VerifyReport reparsed = run_verification(doc.schedule, seeds, 1e-10, VerifyMode::automatic);
    CHECK(verify_report_to_json(direct) == verify_report_to_json(reparsed));
    CHECK(direct.pass);
}

TEST_CASE("verification report format") {
    const PulseSchedule s = compile_qubit_network(21);
    const VerifyReport report = run_verification(s, {1}, 1e-10, VerifyMode::automatic);
    CHECK(report.mode == "pairwise");  // 2^21 is past the dense cap
    CHECK(report.pass);
    CHECK_FALSE(report.residual.has_value());
    const std::string json = verify_report_to_json(report);
    CHECK(json.find("\"residual\": null") != std::string::npos);
    CHECK(json.find("\"mode\": \"pairwise\"") != std::string::npos);
    CHECK(json.find("\"distinct_pulses\": 6") != std::string::npos);

    const VerifyReport dense = run_verification(compile_single_node(2), {1, 2}, 1e-10,
                                                VerifyMode::dense);
    CHECK(dense.pass);
    REQUIRE(dense.residual.has_value());
    CHECK(*dense.residual <= 1e-10);
}

TEST_CASE("explicit dense mode on an oversized system throws") {
    const PulseSchedule s = compile_qubit_network(21);
    CHECK_THROWS(run_verification(s, {1}, 1e-10, VerifyMode::dense));
}
