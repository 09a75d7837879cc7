#pragma once

// Numerical and combinatorial verification of pulse schedules: random
// pair-interaction Hamiltonians, the first-order average Hamiltonian
// under a schedule, scalable pairwise frame counting, and the dense
// equivalence of the pulse-form and toggling-frame-form evolutions.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "decoupling/pauli.hpp"
#include "decoupling/schedule.hpp"

namespace decoupling {

// A pair-interaction Hamiltonian over logical cells of `block` realized
// nodes each: local terms act inside one cell, couplings across exactly
// two. Every term multiplies a Hermitian-symmetrized label matrix
//   herm * (B + B^dag)/2 + anti * i (B - B^dag)/2,
// which keeps H Hermitian and traceless for every node dimension. Cell
// labels are indexed 1..L-1 (L = (d^2)^block), packed base d^2 with a
// node's digit a*d + b and the cell's first node most significant.
struct PairHamiltonian {
    NodeSpec spec;
    std::uint32_t block = 1;
    std::vector<std::vector<std::array<double, 2>>> local;     // [cell][label-1]
    std::vector<std::vector<std::array<double, 2>>> coupling;  // [pair][(la-1)*(L-1)+(lb-1)]

    std::size_t cells() const { return spec.nodes / block; }
    std::uint64_t labels_per_cell() const;  // L
};

// Deterministic from the seed; coefficients i.i.d. uniform in [-1, 1].
PairHamiltonian random_pair_hamiltonian(const NodeSpec& spec, std::uint64_t seed,
                                        std::uint32_t block = 1);

Eigen::MatrixXcd hamiltonian_matrix(const PairHamiltonian& h);

// (1/N) sum_i U_i^dag H U_i over the schedule's toggling frames, summed
// as a fixed-shape pairwise tree so results are reproducible.
Eigen::MatrixXcd average_hamiltonian(const PulseSchedule& schedule, const PairHamiltonian& h);

struct DecouplingReport {
    double residual = 0.0;  // ||avg||_F / ||H||_F, 0 for H = 0
    bool pass = false;
};

DecouplingReport verify_decoupling(const PulseSchedule& schedule, const PairHamiltonian& h,
                                   double tol = 1e-10);

struct PairwiseFailure {
    std::size_t node_a = 0;
    std::size_t node_b = 0;  // == node_a for a single-node count
    std::vector<std::uint32_t> combo;
    std::uint64_t count = 0;
    std::uint64_t expected = 0;
};

struct PairwiseReport {
    bool pass = false;
    std::uint64_t lambda_single = 0;  // N / s
    std::uint64_t lambda_pair = 0;    // N / s^2
    std::size_t pairs_checked = 0;
    std::optional<PairwiseFailure> witness;
};

// Counts frame labels per logical node and per node pair; passes iff each
// single label appears N/s times and each label pair N/s^2 times. No
// dense cap: this is the scalable verification path, combinatorially the
// same check as verify_strength at t = 1 and t = 2 on the frame table.
PairwiseReport pairwise_verify(const PulseSchedule& schedule);

struct SequenceTimes {
    std::vector<double> taus;  // all positive

    static SequenceTimes uniform(std::size_t n);
};

struct EquivalenceReport {
    double distance = 0.0;  // Frobenius distance after global-phase alignment
    bool pass = false;
};

// Builds the pulse-form product (pulse after each evolution interval) and
// the toggling-frame product (frame-conjugated intervals) as dense
// unitaries and compares them up to a global phase.
EquivalenceReport sequence_equivalence(const PulseSchedule& schedule, const PairHamiltonian& h,
                                       const SequenceTimes& times, double tol = 1e-9);

}  // namespace decoupling
