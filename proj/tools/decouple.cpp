// decouple: compile decoupling pulse schedules for spin networks, verify
// them densely or by pairwise counting, and inspect the underlying codes
// and orthogonal arrays.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decoupling/codes.hpp"
#include "decoupling/cycles.hpp"
#include "decoupling/designs.hpp"
#include "decoupling/schedule.hpp"
#include "decoupling/schedule_io.hpp"
#include "decoupling/verifier.hpp"

namespace {

using namespace decoupling;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        seeds.push_back(std::stoull(item));
    }
    if (seeds.empty()) throw std::invalid_argument("no seeds given");
    return seeds;
}

LinearCode build_code(const std::string& family, std::uint32_t q, unsigned m) {
    if (family == "qr5") return qr5_code();
    if (family == "hamming") return hamming_code(q, m);
    if (family == "simplex") return simplex_code(q, m);
    throw std::invalid_argument("unknown family '" + family +
                                "' (available: qr5, hamming, simplex)");
}

std::string render_generator(const LinearCode& code) {
    std::ostringstream out;
    for (std::size_t r = 0; r < code.dimension(); ++r) {
        for (std::size_t c = 0; c < code.length(); ++c) {
            if (c) out << ' ';
            out << to_string(code.generator_entry(r, c));
        }
        out << '\n';
    }
    return out.str();
}

int cmd_compile(const std::string& scenario_str, std::size_t nodes, std::uint32_t dim,
                std::uint32_t alpha, const std::string& out_path, bool emit_frames) {
    const Scenario scenario = scenario_from_name(scenario_str);
    PulseSchedule schedule;
    switch (scenario) {
        case Scenario::single_node:
            if (nodes != 0 && nodes != 1) throw std::invalid_argument("single scenario has one node");
            if (dim == 0) throw std::invalid_argument("--dim is required for single");
            schedule = compile_single_node(dim);
            break;
        case Scenario::bipartite:
            if (nodes != 0 && nodes != 2) throw std::invalid_argument("bipartite scenario has two nodes");
            if (dim == 0) throw std::invalid_argument("--dim is required for bipartite");
            schedule = compile_bipartite(dim);
            break;
        case Scenario::qubit_network:
            if (nodes == 0) throw std::invalid_argument("--nodes is required for qubit-network");
            if (dim != 0 && dim != 2) throw std::invalid_argument("qubit-network nodes have dim 2");
            if (alpha > 1) throw std::invalid_argument("use qudit-network for alpha > 1");
            schedule = compile_qubit_network(nodes);
            break;
        case Scenario::qudit_network:
            if (nodes == 0) throw std::invalid_argument("--nodes is required for qudit-network");
            if (alpha == 0) throw std::invalid_argument("--alpha is required for qudit-network");
            if (dim != 0 && dim != (1u << alpha)) {
                throw std::invalid_argument("qudit-network nodes have dim 2^alpha");
            }
            schedule = compile_qudit_network(nodes, alpha);
            break;
    }
    write_output(schedule_to_json(schedule, emit_frames), out_path);
    return 0;
}

int cmd_verify(const std::string& in_path, const std::string& seeds_str, double tol,
               const std::string& mode_str) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open schedule file: " + in_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const ScheduleDocument doc = schedule_from_json(buffer.str());

    const VerifyReport report = run_verification(doc.schedule, parse_seed_list(seeds_str), tol,
                                                 verify_mode_from_name(mode_str));
    std::cout << verify_report_to_json(report);
    if (!report.pass && !report.detail.empty()) std::cerr << report.detail << '\n';
    return report.pass ? 0 : 1;
}

int cmd_oa(const std::string& family, std::uint32_t q, unsigned m, bool verify, bool force,
           const std::string& out_path) {
    const LinearCode code = build_code(family, q, m);
    const OrthogonalArray array = oa_from_code(code);
    if (verify) {
        const auto r = verify_strength(array, array.strength, force ? 0 : kStrengthCostCap);
        if (!r.pass) {
            std::cerr << "strength verification failed\n";
            return 1;
        }
    }
    write_output(oa_to_text(array), out_path);
    return 0;
}

int cmd_codes_info(const std::string& family, std::uint32_t q, unsigned m) {
    const LinearCode code = build_code(family, q, m);
    const CodeParams p = code_params(code);
    const CodeParams dp = code_params(dual_code(code));
    std::cout << "[" << p.n << "," << p.k << "," << p.d_min << "] over GF("
              << code.field().order() << "), dual [" << dp.n << "," << dp.k << "," << dp.d_min
              << "]\n";
    std::cout << "generator matrix:\n" << render_generator(code);
    if (code.num_codewords() > kEnumerationCap) {
        std::cout << "note: codeword count exceeds the enumeration cap; distance computed by "
                     "support search\n";
    }
    return 0;
}

int cmd_cycles(std::uint32_t d, std::uint32_t k, const std::string& out_path) {
    const StepList sl = hamilton_cycle({d, k});
    std::ostringstream out;
    for (std::size_t i = 0; i < sl.steps.size(); ++i) {
        if (i) out << ',';
        out << sl.steps[i];
    }
    out << '\n';
    write_output(out.str(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decoupling pulse-schedule compiler and verifier"};
    app.require_subcommand(1);

    std::string scenario;
    std::size_t nodes = 0;
    std::uint32_t dim = 0;
    std::uint32_t alpha = 0;
    std::string out_path;
    bool emit_frames = false;
    auto* compile = app.add_subcommand("compile", "compile a pulse schedule");
    compile->add_option("--scenario", scenario,
                        "single, bipartite, qubit-network or qudit-network")
        ->required();
    compile->add_option("--nodes", nodes, "number of nodes (network scenarios)");
    compile->add_option("--dim", dim, "node dimension (single/bipartite)");
    compile->add_option("--alpha", alpha, "qubits per node (qudit-network)");
    compile->add_option("--out", out_path, "output file (default stdout)");
    compile->add_flag("--emit-frames", emit_frames, "include the toggling frames");

    std::string in_path;
    std::string seeds = "1,2,3,4,5";
    double tol = 1e-10;
    std::string mode = "auto";
    auto* verify = app.add_subcommand("verify", "verify a schedule file");
    verify->add_option("--in", in_path, "schedule file")->required();
    verify->add_option("--seeds", seeds, "comma-separated Hamiltonian seeds");
    verify->add_option("--tol", tol, "residual tolerance");
    verify->add_option("--mode", mode, "auto, dense or pairwise");

    std::string oa_family;
    std::uint32_t oa_q = 4;
    unsigned oa_m = 2;
    bool oa_verify = false;
    bool oa_force = false;
    std::string oa_out;
    auto* oa = app.add_subcommand("oa", "print an orthogonal array from a code");
    oa->add_option("--code", oa_family, "qr5, hamming or simplex")->required();
    oa->add_option("--q", oa_q, "field order (hamming/simplex)");
    oa->add_option("--m", oa_m, "parameter m (hamming/simplex)");
    oa->add_flag("--verify", oa_verify, "run the exhaustive strength check");
    oa->add_flag("--force", oa_force, "lift the strength-check cost cap");
    oa->add_option("--out", oa_out, "output file (default stdout)");

    std::string codes_family;
    std::uint32_t codes_q = 4;
    unsigned codes_m = 2;
    auto* codes = app.add_subcommand("codes", "inspect linear codes");
    auto* info = codes->add_subcommand("info", "print code parameters and duals");
    info->add_option("--family", codes_family, "qr5, hamming or simplex")->required();
    info->add_option("--q", codes_q, "field order (hamming/simplex)");
    info->add_option("--m", codes_m, "parameter m (hamming/simplex)");
    codes->require_subcommand(1);

    std::uint32_t cyc_d = 2;
    std::uint32_t cyc_k = 1;
    std::string cyc_out;
    auto* cycles = app.add_subcommand("cycles", "print a Hamilton-cycle step list");
    cycles->add_option("--d", cyc_d, "modulus")->required();
    cycles->add_option("--k", cyc_k, "coordinates")->required();
    cycles->add_option("--out", cyc_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (compile->parsed()) return cmd_compile(scenario, nodes, dim, alpha, out_path, emit_frames);
        if (verify->parsed()) return cmd_verify(in_path, seeds, tol, mode);
        if (oa->parsed()) return cmd_oa(oa_family, oa_q, oa_m, oa_verify, oa_force, oa_out);
        if (codes->parsed()) return cmd_codes_info(codes_family, codes_q, codes_m);
        if (cycles->parsed()) return cmd_cycles(cyc_d, cyc_k, cyc_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
