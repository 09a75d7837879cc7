// End-to-end checks of the decouple binary; the path comes from CMake.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "decoupling/schedule_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(DECOUPLE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST_CASE("compile single d=6: two pulses, 36 steps") {
    const RunResult r = run("compile --scenario single --dim 6");
    REQUIRE(r.exit_code == 0);
    const auto doc = decoupling::schedule_from_json(r.output);
    CHECK(doc.schedule.num_steps == 36);
    CHECK(doc.schedule.pulses.size() == 2);
}

TEST_CASE("compile rejects bad arguments with exit code 2") {
    CHECK(run("compile --scenario single --dim 1").exit_code == 2);
    CHECK(run("compile --scenario nosuch --dim 2").exit_code == 2);
    CHECK(run("compile --scenario qubit-network").exit_code == 2);
    CHECK(run("compile").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code == 2);
}

TEST_CASE("compile output is deterministic") {
    const RunResult a = run("compile --scenario qubit-network --nodes 5 --emit-frames");
    const RunResult b = run("compile --scenario qubit-network --nodes 5 --emit-frames");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    const auto doc = decoupling::schedule_from_json(a.output);
    CHECK(doc.schedule.pulses.size() == 4);
    CHECK(doc.schedule.num_steps == 16);
}

TEST_CASE("oa subcommand prints the export format") {
    const RunResult r = run("oa --code qr5");
    REQUIRE(r.exit_code == 0);
    CHECK(first_line(r.output) == "OA 16 5 4 2 1");

    const RunResult rs = run("oa --code simplex --q 4 --m 3 --verify");
    REQUIRE(rs.exit_code == 0);
    CHECK(first_line(rs.output) == "OA 64 21 4 2 4");

    const RunResult rh = run("oa --code hamming --q 2 --m 3 --verify");
    REQUIRE(rh.exit_code == 0);
    CHECK(first_line(rh.output) == "OA 16 7 2 3 2");
}

TEST_CASE("codes info") {
    const RunResult r = run("codes info --family qr5");
    REQUIRE(r.exit_code == 0);
    CHECK(first_line(r.output) == "[5,2,4] over GF(4), dual [5,3,3]");
    CHECK(r.output.find("1 0 1 W W") != std::string::npos);

    const RunResult rh = run("codes info --family hamming --q 4 --m 2");
    REQUIRE(rh.exit_code == 0);
    CHECK(first_line(rh.output) == "[5,3,3] over GF(4), dual [5,2,4]");

    const RunResult bad = run("codes info --family nosuch");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("qr5") != std::string::npos);  // lists the families
}

TEST_CASE("verify: pass, tampered file, pairwise mode") {
    const auto path = temp_file("decouple_cli_test_schedule.json");
    REQUIRE(run("compile --scenario qubit-network --nodes 5 --out " + path.string()).exit_code ==
            0);
    const RunResult ok = run("verify --in " + path.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"pass\": true") != std::string::npos);
    CHECK(ok.output.find("\"mode\": \"dense\"") != std::string::npos);

    // tamper one sequence entry
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    const auto pos = text.find("[0,1,0,2");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 8, "[0,1,0,1");
    const auto tampered = temp_file("decouple_cli_test_tampered.json");
    std::ofstream(tampered) << text;
    const RunResult bad = run("verify --in " + tampered.string());
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("\"pass\": false") != std::string::npos);

    const auto big = temp_file("decouple_cli_test_21.json");
    REQUIRE(run("compile --scenario qubit-network --nodes 21 --out " + big.string()).exit_code ==
            0);
    const RunResult pairwise = run("verify --in " + big.string());
    CHECK(pairwise.exit_code == 0);
    CHECK(pairwise.output.find("\"mode\": \"pairwise\"") != std::string::npos);

    std::filesystem::remove(path);
    std::filesystem::remove(tampered);
    std::filesystem::remove(big);
}

TEST_CASE("cycles subcommand dumps comma-separated generators") {
    const RunResult r = run("cycles --d 2 --k 2");
    REQUIRE(r.exit_code == 0);
    CHECK(first_line(r.output) == "0,1,0,1");
}

TEST_CASE("DECOUPLE_CAP_DENSE overrides the dense cap") {
    const auto path = temp_file("decouple_cli_test_cap.json");
    REQUIRE(run("compile --scenario single --dim 2 --out " + path.string()).exit_code == 0);

    // with a cap of 1 even a single qubit cannot go dense: auto mode falls
    // back to pairwise, forced dense mode is a usage error
    const std::string env = "DECOUPLE_CAP_DENSE=1 ";
    const RunResult auto_mode = run("verify --in " + path.string(), env);
    CHECK(auto_mode.exit_code == 0);
    CHECK(auto_mode.output.find("\"mode\": \"pairwise\"") != std::string::npos);

    const RunResult forced = run("verify --in " + path.string() + " --mode dense", env);
    CHECK(forced.exit_code == 2);
    std::filesystem::remove(path);
}
