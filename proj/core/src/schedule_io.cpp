#include "decoupling/schedule_io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "decoupling/verifier.hpp"

namespace decoupling {

namespace {

using ordered_json = nlohmann::ordered_json;

// Labels render inline so the files stay diffable:  [[0,0],[1,0],...]
void append_label(std::string& out, const PauliLabel& label) {
    out += '[';
    for (std::size_t i = 0; i < label.nodes(); ++i) {
        if (i) out += ',';
        out += '[';
        out += std::to_string(label.a(i));
        out += ',';
        out += std::to_string(label.b(i));
        out += ']';
    }
    out += ']';
}

PauliLabel label_from_json(const NodeSpec& spec, const ordered_json& j) {
    if (!j.is_array() || j.size() != spec.nodes) {
        throw std::invalid_argument("label must list one [a, b] pair per node");
    }
    std::vector<std::array<std::uint32_t, 2>> ops;
    ops.reserve(spec.nodes);
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_number_unsigned()) {
            throw std::invalid_argument("label entries must be [a, b] integer pairs");
        }
        const auto a = pair[0].get<std::uint64_t>();
        const auto b = pair[1].get<std::uint64_t>();
        if (a >= spec.dim || b >= spec.dim) {
            throw std::invalid_argument("label entry not reduced mod d");
        }
        ops.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
    }
    return {spec, std::move(ops)};
}

}  // namespace

std::string schedule_to_json(const PulseSchedule& schedule, bool emit_frames) {
    std::string out;
    out += "{\n";
    out += "  \"version\": \"1\",\n";
    out += "  \"scenario\": \"" + scenario_name(schedule.scenario) + "\",\n";
    out += "  \"n\": " + std::to_string(schedule.logical_nodes) + ",\n";
    out += "  \"d\": " + std::to_string(schedule.logical_dim) + ",\n";
    if (schedule.scenario == Scenario::qudit_network) {
        out += "  \"alpha\": " + std::to_string(schedule.block) + ",\n";
    }
    out += "  \"N\": " + std::to_string(schedule.num_steps) + ",\n";
    out += "  \"pulses\": [\n";
    for (std::size_t i = 0; i < schedule.pulses.size(); ++i) {
        out += "    {\"id\": " + std::to_string(i) + ", \"labels\": ";
        append_label(out, schedule.pulses[i]);
        out += (i + 1 < schedule.pulses.size()) ? "},\n" : "}\n";
    }
    out += "  ],\n";
    out += "  \"sequence\": [";
    for (std::size_t i = 0; i < schedule.sequence.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(schedule.sequence[i]);
    }
    out += "],\n";
    if (emit_frames) {
        out += "  \"frames\": [\n";
        for (std::size_t i = 0; i < schedule.frames.size(); ++i) {
            out += "    ";
            append_label(out, schedule.frames[i]);
            out += (i + 1 < schedule.frames.size()) ? ",\n" : "\n";
        }
        out += "  ],\n";
    }
    out += "  \"times\": \"uniform\"\n";
    out += "}\n";
    return out;
}

ScheduleDocument schedule_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("schedule file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("schedule file must be a JSON object");
    if (j.value("version", "") != "1") throw std::invalid_argument("unsupported schedule version");

    PulseSchedule schedule;
    schedule.scenario = scenario_from_name(j.at("scenario").get<std::string>());
    schedule.logical_nodes = j.at("n").get<std::size_t>();
    schedule.logical_dim = j.at("d").get<std::uint32_t>();
    schedule.num_steps = j.at("N").get<std::size_t>();

    switch (schedule.scenario) {
        case Scenario::single_node:
            if (schedule.logical_nodes != 1) throw std::invalid_argument("single scenario needs n = 1");
            if (j.contains("alpha")) throw std::invalid_argument("alpha only applies to qudit-network");
            schedule.block = 1;
            schedule.spec = {1, schedule.logical_dim};
            break;
        case Scenario::bipartite:
            if (schedule.logical_nodes != 2) throw std::invalid_argument("bipartite scenario needs n = 2");
            if (j.contains("alpha")) throw std::invalid_argument("alpha only applies to qudit-network");
            schedule.block = 1;
            schedule.spec = {2, schedule.logical_dim};
            break;
        case Scenario::qubit_network:
            if (schedule.logical_dim != 2) throw std::invalid_argument("qubit-network needs d = 2");
            if (j.contains("alpha")) throw std::invalid_argument("alpha only applies to qudit-network");
            schedule.block = 1;
            schedule.spec = {schedule.logical_nodes, 2};
            break;
        case Scenario::qudit_network: {
            const auto alpha = j.at("alpha").get<std::uint32_t>();
            if (alpha < 2) throw std::invalid_argument("qudit-network needs alpha >= 2");
            if (schedule.logical_dim != (1u << alpha)) {
                throw std::invalid_argument("qudit-network needs d = 2^alpha");
            }
            schedule.block = alpha;
            schedule.spec = {schedule.logical_nodes * alpha, 2};
            break;
        }
    }
    if (schedule.logical_dim < 2) throw std::invalid_argument("node dimension must be >= 2");
    if (schedule.logical_nodes < 1) throw std::invalid_argument("node count must be >= 1");

    const auto& pulses = j.at("pulses");
    if (!pulses.is_array() || pulses.empty()) throw std::invalid_argument("pulses must be a nonempty list");
    std::vector<std::optional<PauliLabel>> by_id(pulses.size());
    for (const auto& p : pulses) {
        const auto id = p.at("id").get<std::uint64_t>();
        if (id >= by_id.size() || by_id[id].has_value()) {
            throw std::invalid_argument("pulse ids must be unique integers 0..P-1");
        }
        by_id[id] = label_from_json(schedule.spec, p.at("labels"));
    }
    for (auto& p : by_id) schedule.pulses.push_back(std::move(*p));

    const auto& sequence = j.at("sequence");
    if (!sequence.is_array() || sequence.size() != schedule.num_steps) {
        throw std::invalid_argument("sequence length must equal N");
    }
    for (const auto& s : sequence) {
        const auto id = s.get<std::uint64_t>();
        if (id >= schedule.pulses.size()) throw std::invalid_argument("sequence references unknown pulse id");
        schedule.sequence.push_back(static_cast<std::uint32_t>(id));
    }

    if (j.contains("frames")) {
        const auto& frames = j.at("frames");
        if (!frames.is_array() || frames.size() != schedule.num_steps) {
            throw std::invalid_argument("frames length must equal N");
        }
        for (const auto& f : frames) schedule.frames.push_back(label_from_json(schedule.spec, f));
    } else {
        // Prefix sums; deliberately no closure assertion here.
        PauliLabel frame = PauliLabel::identity(schedule.spec);
        for (std::uint32_t s : schedule.sequence) {
            schedule.frames.push_back(frame);
            frame = frame + schedule.pulses[s];
        }
    }

    ScheduleDocument doc;
    const auto& times = j.at("times");
    if (times.is_string()) {
        if (times.get<std::string>() != "uniform") throw std::invalid_argument("unknown times value");
    } else if (times.is_array()) {
        if (times.size() != schedule.num_steps) throw std::invalid_argument("times length must equal N");
        std::vector<double> taus;
        for (const auto& t : times) {
            const double v = t.get<double>();
            if (!(v > 0.0)) throw std::invalid_argument("times must be positive");
            taus.push_back(v);
        }
        doc.times = std::move(taus);
    } else {
        throw std::invalid_argument("times must be \"uniform\" or a list");
    }
    doc.schedule = std::move(schedule);
    return doc;
}

VerifyMode verify_mode_from_name(const std::string& name) {
    if (name == "auto") return VerifyMode::automatic;
    if (name == "dense") return VerifyMode::dense;
    if (name == "pairwise") return VerifyMode::pairwise;
    throw std::invalid_argument("unknown mode '" + name + "' (expected auto, dense or pairwise)");
}

std::string verify_report_to_json(const VerifyReport& report) {
    ordered_json j;
    j["scenario"] = report.scenario;
    j["n"] = report.n;
    j["d"] = report.d;
    j["N"] = report.num_steps;
    j["distinct_pulses"] = report.distinct_pulses;
    if (report.residual.has_value()) {
        j["residual"] = *report.residual;
    } else {
        j["residual"] = nullptr;
    }
    j["pass"] = report.pass;
    j["seeds"] = report.seeds;
    j["mode"] = report.mode;
    return j.dump(2) + "\n";
}

VerifyReport run_verification(const PulseSchedule& schedule,
                              const std::vector<std::uint64_t>& seeds, double tol,
                              VerifyMode mode) {
    VerifyReport report;
    report.scenario = scenario_name(schedule.scenario);
    report.n = schedule.logical_nodes;
    report.d = schedule.logical_dim;
    report.num_steps = schedule.num_steps;
    report.distinct_pulses = distinct_pulse_count(schedule);
    report.seeds = seeds;

    const bool dense_fits = [&] {
        try {
            total_dimension(schedule.spec);
            return true;
        } catch (const std::length_error&) {
            return false;
        }
    }();
    const bool dense = (mode == VerifyMode::dense) ||
                       (mode == VerifyMode::automatic && dense_fits);
    report.mode = dense ? "dense" : "pairwise";

    // Structural checks: the sequence must compose to the identity and the
    // frames must be its prefix sums.
    PauliLabel frame = PauliLabel::identity(schedule.spec);
    for (std::size_t i = 0; i < schedule.sequence.size(); ++i) {
        if (i < schedule.frames.size() && schedule.frames[i] != frame) {
            report.pass = false;
            report.detail = "frame " + std::to_string(i) + " is not the pulse prefix sum";
            return report;
        }
        frame = frame + schedule.pulses.at(schedule.sequence[i]);
    }
    if (schedule.frames.size() != schedule.sequence.size()) {
        report.pass = false;
        report.detail = "frames/sequence length mismatch";
        return report;
    }
    if (!frame.is_identity()) {
        report.pass = false;
        report.detail = "sequence does not compose to the identity label";
        return report;
    }

    if (dense) {
        if (seeds.empty()) throw std::invalid_argument("dense verification needs at least one seed");
        double worst = 0.0;
        for (std::uint64_t seed : seeds) {
            const auto h = random_pair_hamiltonian(schedule.spec, seed, schedule.block);
            const auto r = verify_decoupling(schedule, h, tol);
            worst = std::max(worst, r.residual);
        }
        report.residual = worst;
        report.pass = worst <= tol;
        if (!report.pass) report.detail = "average-Hamiltonian residual above tolerance";
    } else {
        const auto r = pairwise_verify(schedule);
        report.pass = r.pass;
        if (!r.pass && r.witness.has_value()) {
            std::ostringstream msg;
            msg << "pairwise count failed at nodes (" << r.witness->node_a << ", "
                << r.witness->node_b << ") combo";
            for (auto v : r.witness->combo) msg << ' ' << v;
            msg << ": " << r.witness->count << " != " << r.witness->expected;
            report.detail = msg.str();
        }
    }
    return report;
}

}  // namespace decoupling
