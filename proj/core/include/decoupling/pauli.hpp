#pragma once

// Generalized Pauli labels for networks of d-dimensional nodes and their
// dense realizations. A node label (a, b) stands for sigma_x^a sigma_z^b
// with sigma_x = sum_i |i><i+1| and sigma_z = sum_i w_d^i |i><i|. Labels
// deliberately carry no phase: the label group is Z_d^(2n) under
// componentwise addition, and every verification path uses conjugation,
// which is phase-insensitive.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace decoupling {

struct NodeSpec {
    std::size_t nodes = 1;
    std::uint32_t dim = 2;

    bool operator==(const NodeSpec& other) const {
        return nodes == other.nodes && dim == other.dim;
    }
    bool operator!=(const NodeSpec& other) const { return !(*this == other); }
};

// Hilbert-space side limit for dense-matrix paths; the environment
// variable DECOUPLE_CAP_DENSE overrides the default of 8192.
std::uint64_t dense_cap();

// d^n, throwing past dense_cap() when `enforce_cap`.
std::uint64_t total_dimension(const NodeSpec& spec, bool enforce_cap = true);

class PauliLabel {
  public:
    PauliLabel(const NodeSpec& spec, std::vector<std::array<std::uint32_t, 2>> ops);

    static PauliLabel identity(const NodeSpec& spec);
    // Identity everywhere except (a, b) on one node.
    static PauliLabel single(const NodeSpec& spec, std::size_t node, std::uint32_t a,
                             std::uint32_t b);

    std::size_t nodes() const { return ops_.size(); }
    std::uint32_t dim() const { return dim_; }
    std::uint32_t a(std::size_t node) const { return ops_[node][0]; }
    std::uint32_t b(std::size_t node) const { return ops_[node][1]; }
    const std::vector<std::array<std::uint32_t, 2>>& ops() const { return ops_; }
    bool is_identity() const;

    // Componentwise addition mod d: the product of the operators up to a
    // global phase.
    PauliLabel operator+(const PauliLabel& other) const;

    bool operator==(const PauliLabel& other) const {
        return dim_ == other.dim_ && ops_ == other.ops_;
    }
    bool operator!=(const PauliLabel& other) const { return !(*this == other); }
    bool operator<(const PauliLabel& other) const;  // lexicographic, for set containers

  private:
    std::uint32_t dim_;
    std::vector<std::array<std::uint32_t, 2>> ops_;
};

// Dense d x d matrix of sigma_x^a sigma_z^b.
Eigen::MatrixXcd single_node_pauli(std::uint32_t d, std::uint32_t a, std::uint32_t b);

// Tensor product over nodes, node 0 leftmost; unitary, d^n x d^n.
Eigen::MatrixXcd label_matrix(const NodeSpec& spec, const PauliLabel& label);

// All d^2 single-node labels (i, j) in row-major order.
std::vector<PauliLabel> operator_basis(std::uint32_t d);

// (1/d^2) sum_U U^dag M U over the single-node Pauli basis; equals
// tr(M)/d * I for every M.
Eigen::MatrixXcd basis_average(const Eigen::MatrixXcd& m);

// Per-node tokens joined by spaces: "I", and for d=2 the names X, Z and
// Y (meaning XZ up to phase); "X^aZ^b" otherwise.
std::string render_label(const PauliLabel& label);

}  // namespace decoupling
