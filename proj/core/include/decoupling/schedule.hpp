#pragma once

// Pulse-schedule compilation. Every scenario walks a Hamilton cycle
// through the group of toggling frames so that consecutive frames differ
// by one of very few distinct pulses:
//
//   single node on C^d     : Z_d^2 cycle, 2 pulses (sigma_x, sigma_z)
//   bipartite C^d (x) C^d  : Z_d^4 cycle, 4 pulses
//   n0-qubit network       : GF(4) code of dimension m, 2m pulses
//   network of 2^alpha dims: GF(2^(2 alpha)) code, 2 alpha m pulses
//
// Network frames are the code's q^m codewords ordered along the binary
// reflected Gray cycle on the message bits, truncated to the first n0
// coordinates; each field symbol turns into alpha qubit labels.

#include <cstdint>
#include <string>
#include <vector>

#include "decoupling/designs.hpp"
#include "decoupling/pauli.hpp"

namespace decoupling {

enum class Scenario { single_node, bipartite, qubit_network, qudit_network };

std::string scenario_name(Scenario scenario);
Scenario scenario_from_name(const std::string& name);

struct PulseSchedule {
    Scenario scenario = Scenario::single_node;
    NodeSpec spec;                  // realized layout (qubits for networks)
    std::size_t logical_nodes = 1;  // nodes as the user sees them
    std::uint32_t logical_dim = 2;  // dimension of one logical node
    std::uint32_t block = 1;        // realized nodes per logical node
    std::size_t num_steps = 0;      // N
    std::vector<PauliLabel> pulses;        // the distinct pulses
    std::vector<std::uint32_t> sequence;   // N indices into pulses
    std::vector<PauliLabel> frames;        // N prefix sums, frames[0] = identity
};

PulseSchedule compile_single_node(std::uint32_t d);
PulseSchedule compile_bipartite(std::uint32_t d);
PulseSchedule compile_qubit_network(std::size_t n0);

// Nodes of dimension 2^alpha via Hamming/simplex codes over GF(2^(2 alpha));
// alpha = 1 is exactly compile_qubit_network.
PulseSchedule compile_qudit_network(std::size_t n0, std::uint32_t alpha);

std::size_t distinct_pulse_count(const PulseSchedule& schedule);

// The frames as an n x N symbol array over the logical-node alphabet
// (field symbols for network scenarios, a*d+b packing otherwise), with
// the scenario's claimed strength (1 for a single node, 2 otherwise).
OrthogonalArray frame_symbol_table(const PulseSchedule& schedule);

// GF(2^(2 alpha)) symbol <-> label block of alpha qubits. The GF(4) case
// is the fixed map 0->I, 1->X, w->Y, W->Z.
std::vector<std::array<std::uint32_t, 2>> symbol_to_qubit_ops(const FieldSpec& spec,
                                                              std::uint32_t value);
std::uint32_t qubit_ops_to_symbol(const FieldSpec& spec,
                                  const std::array<std::uint32_t, 2>* ops, std::uint32_t alpha);

}  // namespace decoupling
