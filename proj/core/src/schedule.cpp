#include "decoupling/schedule.hpp"

#include <set>
#include <stdexcept>

#include "decoupling/cycles.hpp"

namespace decoupling {

namespace {

constexpr std::uint64_t kScheduleCellCap = 1ull << 26;

std::vector<PauliLabel> prefix_frames(const NodeSpec& spec,
                                      const std::vector<PauliLabel>& pulses,
                                      const std::vector<std::uint32_t>& sequence) {
    std::vector<PauliLabel> frames;
    frames.reserve(sequence.size());
    PauliLabel frame = PauliLabel::identity(spec);
    for (std::uint32_t s : sequence) {
        frames.push_back(frame);
        frame = frame + pulses.at(s);
    }
    if (!frame.is_identity()) throw std::logic_error("pulse sequence does not close");
    return frames;
}

}  // namespace

std::string scenario_name(Scenario scenario) {
    switch (scenario) {
        case Scenario::single_node: return "single";
        case Scenario::bipartite: return "bipartite";
        case Scenario::qubit_network: return "qubit-network";
        case Scenario::qudit_network: return "qudit-network";
    }
    throw std::logic_error("unknown scenario");
}

Scenario scenario_from_name(const std::string& name) {
    if (name == "single") return Scenario::single_node;
    if (name == "bipartite") return Scenario::bipartite;
    if (name == "qubit-network") return Scenario::qubit_network;
    if (name == "qudit-network") return Scenario::qudit_network;
    throw std::invalid_argument("unknown scenario '" + name +
                                "' (expected single, bipartite, qubit-network or qudit-network)");
}

PulseSchedule compile_single_node(std::uint32_t d) {
    if (d < 2) throw std::invalid_argument("node dimension must be >= 2");
    const NodeSpec spec{1, d};
    const StepList cycle = hamilton_cycle({d, 2});

    PulseSchedule out;
    out.scenario = Scenario::single_node;
    out.spec = spec;
    out.logical_nodes = 1;
    out.logical_dim = d;
    out.block = 1;
    out.pulses = {PauliLabel::single(spec, 0, 1, 0), PauliLabel::single(spec, 0, 0, 1)};
    out.sequence = cycle.steps;
    out.num_steps = out.sequence.size();
    out.frames = prefix_frames(spec, out.pulses, out.sequence);
    return out;
}

PulseSchedule compile_bipartite(std::uint32_t d) {
    if (d < 2) throw std::invalid_argument("node dimension must be >= 2");
    const NodeSpec spec{2, d};
    const StepList cycle = hamilton_cycle({d, 4});

    PulseSchedule out;
    out.scenario = Scenario::bipartite;
    out.spec = spec;
    out.logical_nodes = 2;
    out.logical_dim = d;
    out.block = 1;
    // Generator 2j+0 is sigma_x on node j, 2j+1 is sigma_z on node j.
    out.pulses = {PauliLabel::single(spec, 0, 1, 0), PauliLabel::single(spec, 0, 0, 1),
                  PauliLabel::single(spec, 1, 1, 0), PauliLabel::single(spec, 1, 0, 1)};
    out.sequence = cycle.steps;
    out.num_steps = out.sequence.size();
    out.frames = prefix_frames(spec, out.pulses, out.sequence);
    return out;
}

std::vector<std::array<std::uint32_t, 2>> symbol_to_qubit_ops(const FieldSpec& spec,
                                                              std::uint32_t value) {
    const unsigned e = spec.degree();
    if (e % 2 != 0) throw std::invalid_argument("field degree must be even (q = 2^(2 alpha))");
    const auto bits = bits_iso(FieldElement(spec, value));
    std::vector<std::array<std::uint32_t, 2>> ops(e / 2);
    for (unsigned p = 0; p < e / 2; ++p) {
        const std::uint32_t u = bits[2 * p];
        const std::uint32_t v = bits[2 * p + 1];
        ops[p] = {u ^ v, u};  // (0,0)I (0,1)X (1,0)Y (1,1)Z
    }
    return ops;
}

std::uint32_t qubit_ops_to_symbol(const FieldSpec& spec,
                                  const std::array<std::uint32_t, 2>* ops, std::uint32_t alpha) {
    if (spec.degree() != 2 * alpha) throw std::invalid_argument("field degree/alpha mismatch");
    std::vector<int> bits(2 * alpha);
    for (std::uint32_t p = 0; p < alpha; ++p) {
        const std::uint32_t a = ops[p][0], b = ops[p][1];
        bits[2 * p] = static_cast<int>(b);
        bits[2 * p + 1] = static_cast<int>(a ^ b);
    }
    return bits_iso_inv(spec, bits).value();
}

namespace {

PulseSchedule compile_network(std::size_t n0, std::uint32_t alpha) {
    if (n0 < 2) throw std::invalid_argument("network needs at least 2 nodes");
    if (alpha < 1 || alpha > FieldSpec::max_degree / 2) {
        throw std::invalid_argument("alpha must be in [1, 8]");
    }
    const unsigned e = 2 * alpha;
    const std::uint32_t q = 1u << e;
    const FieldSpec field = FieldSpec::binary(e);

    // Smallest m with (q^m - 1)/(q - 1) >= n0; for q = 4 this is the
    // unique m with n0 <= (4^m - 1)/3 <= 4 n0, and it keeps the truncated
    // codewords distinct (simplex weight q^(m-1) exceeds n - n0).
    unsigned m = 1;
    std::uint64_t code_len = 1;
    while (code_len < n0) {
        ++m;
        code_len = code_len * q + 1;
        if (m > 24) throw std::length_error("network size out of range");
    }

    const unsigned k = e * m;  // Gray coordinates = message bits
    if (k >= 63) throw std::length_error("schedule size cap exceeded");
    const std::uint64_t num_steps = 1ull << k;
    const std::uint64_t realized_nodes = static_cast<std::uint64_t>(n0) * alpha;
    if (num_steps * realized_nodes > kScheduleCellCap) {
        throw std::length_error("schedule size cap exceeded");
    }

    const LinearCode code = (q == 4 && m == 2) ? qr5_code() : simplex_code(q, m);
    const NodeSpec spec{static_cast<std::size_t>(realized_nodes), 2};

    // Pulse for Gray coordinate c: flipping c toggles one message bit,
    // so the frame moves by a fixed multiple of one generator row.
    // Coordinate 0 is the top-of-recursion coordinate (flipped most
    // often) and corresponds to the bottom row of the Gray table.
    std::vector<PauliLabel> pulses;
    pulses.reserve(k);
    for (unsigned c = 0; c < k; ++c) {
        const unsigned row = k - 1 - c;        // 0-based table row from the top
        const unsigned coord = row / e;        // message coordinate
        const unsigned bitpos = row % e;       // big-endian bit within the symbol
        const std::uint32_t delta = 1u << (e - 1 - bitpos);
        std::vector<std::array<std::uint32_t, 2>> ops;
        ops.reserve(realized_nodes);
        for (std::size_t col = 0; col < n0; ++col) {
            const std::uint32_t sym =
                field.mul(delta, code.generator_entry(coord, col).value());
            const auto node_ops = symbol_to_qubit_ops(field, sym);
            ops.insert(ops.end(), node_ops.begin(), node_ops.end());
        }
        pulses.emplace_back(spec, std::move(ops));
    }
    if (std::set<PauliLabel>(pulses.begin(), pulses.end()).size() != pulses.size()) {
        throw std::logic_error("truncated pulses are not distinct");
    }

    const StepList cycle = hamilton_cycle({2, k});

    PulseSchedule out;
    out.scenario = (alpha == 1) ? Scenario::qubit_network : Scenario::qudit_network;
    out.spec = spec;
    out.logical_nodes = n0;
    out.logical_dim = 1u << alpha;
    out.block = alpha;
    out.pulses = std::move(pulses);
    out.sequence = cycle.steps;
    out.num_steps = out.sequence.size();
    out.frames = prefix_frames(spec, out.pulses, out.sequence);
    return out;
}

}  // namespace

PulseSchedule compile_qubit_network(std::size_t n0) { return compile_network(n0, 1); }

PulseSchedule compile_qudit_network(std::size_t n0, std::uint32_t alpha) {
    return compile_network(n0, alpha);
}

std::size_t distinct_pulse_count(const PulseSchedule& schedule) { return schedule.pulses.size(); }

OrthogonalArray frame_symbol_table(const PulseSchedule& schedule) {
    const bool network = schedule.scenario == Scenario::qubit_network ||
                         schedule.scenario == Scenario::qudit_network;
    const std::uint32_t alpha = schedule.block;
    const std::uint64_t s =
        static_cast<std::uint64_t>(schedule.logical_dim) * schedule.logical_dim;

    OrthogonalArray table;
    table.symbols = static_cast<std::uint32_t>(s);
    table.factors = schedule.logical_nodes;
    table.runs = schedule.frames.size();
    table.strength = (schedule.scenario == Scenario::single_node) ? 1 : 2;
    std::uint64_t st = 1;
    for (unsigned i = 0; i < table.strength; ++i) st *= s;
    table.index = table.runs / st;
    table.cells.resize(table.factors * table.runs);

    const FieldSpec field = network ? FieldSpec::binary(2 * alpha) : FieldSpec::binary(2);
    for (std::size_t c = 0; c < table.runs; ++c) {
        const PauliLabel& frame = schedule.frames.at(c);
        for (std::size_t node = 0; node < table.factors; ++node) {
            std::uint32_t sym;
            if (network) {
                sym = qubit_ops_to_symbol(field, frame.ops().data() + node * alpha, alpha);
            } else {
                sym = frame.a(node) * schedule.logical_dim + frame.b(node);
            }
            table.at(node, c) = sym;
        }
    }
    return table;
}

}  // namespace decoupling
