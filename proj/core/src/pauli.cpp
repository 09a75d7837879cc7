#include "decoupling/pauli.hpp"

#include <complex>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace decoupling {

std::uint64_t dense_cap() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("DECOUPLE_CAP_DENSE")) {
            const long long v = std::atoll(env);
            if (v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{8192};
    }();
    return cap;
}

std::uint64_t total_dimension(const NodeSpec& spec, bool enforce_cap) {
    if (spec.nodes < 1) throw std::invalid_argument("node count must be >= 1");
    if (spec.dim < 2) throw std::invalid_argument("node dimension must be >= 2");
    std::uint64_t dim = 1;
    for (std::size_t i = 0; i < spec.nodes; ++i) {
        dim *= spec.dim;
        if (enforce_cap && dim > dense_cap()) {
            throw std::length_error("dense dimension cap exceeded");
        }
    }
    return dim;
}

PauliLabel::PauliLabel(const NodeSpec& spec, std::vector<std::array<std::uint32_t, 2>> ops)
    : dim_(spec.dim), ops_(std::move(ops)) {
    if (ops_.size() != spec.nodes) throw std::invalid_argument("label/node count mismatch");
    for (auto& op : ops_) {
        op[0] %= dim_;
        op[1] %= dim_;
    }
}

PauliLabel PauliLabel::identity(const NodeSpec& spec) {
    return {spec, std::vector<std::array<std::uint32_t, 2>>(spec.nodes, {0, 0})};
}

PauliLabel PauliLabel::single(const NodeSpec& spec, std::size_t node, std::uint32_t a,
                              std::uint32_t b) {
    if (node >= spec.nodes) throw std::invalid_argument("node index out of range");
    auto label = identity(spec);
    label.ops_[node] = {a % spec.dim, b % spec.dim};
    return label;
}

bool PauliLabel::is_identity() const {
    for (const auto& op : ops_) {
        if (op[0] || op[1]) return false;
    }
    return true;
}

PauliLabel PauliLabel::operator+(const PauliLabel& other) const {
    if (dim_ != other.dim_ || ops_.size() != other.ops_.size()) {
        throw std::invalid_argument("label shape mismatch");
    }
    PauliLabel out = *this;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        out.ops_[i][0] = (ops_[i][0] + other.ops_[i][0]) % dim_;
        out.ops_[i][1] = (ops_[i][1] + other.ops_[i][1]) % dim_;
    }
    return out;
}

bool PauliLabel::operator<(const PauliLabel& other) const {
    if (dim_ != other.dim_) return dim_ < other.dim_;
    return ops_ < other.ops_;
}

Eigen::MatrixXcd single_node_pauli(std::uint32_t d, std::uint32_t a, std::uint32_t b) {
    if (d < 2) throw std::invalid_argument("node dimension must be >= 2");
    a %= d;
    b %= d;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    const double theta = 2.0 * std::numbers::pi / d;
    for (std::uint32_t i = 0; i < d; ++i) {
        const std::uint32_t j = (i + a) % d;  // sigma_x^a shifts |j> -> |j-a>
        m(i, j) = std::polar(1.0, theta * static_cast<double>(b) * static_cast<double>(j));
    }
    return m;
}

Eigen::MatrixXcd label_matrix(const NodeSpec& spec, const PauliLabel& label) {
    if (label.nodes() != spec.nodes || label.dim() != spec.dim) {
        throw std::invalid_argument("label/node spec mismatch");
    }
    total_dimension(spec);  // enforce the dense cap
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t node = 0; node < spec.nodes; ++node) {
        const Eigen::MatrixXcd factor = single_node_pauli(spec.dim, label.a(node), label.b(node));
        Eigen::MatrixXcd next(out.rows() * factor.rows(), out.cols() * factor.cols());
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block(r * factor.rows(), c * factor.cols(), factor.rows(), factor.cols()) =
                    out(r, c) * factor;
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<PauliLabel> operator_basis(std::uint32_t d) {
    const NodeSpec spec{1, d};
    std::vector<PauliLabel> out;
    out.reserve(static_cast<std::size_t>(d) * d);
    for (std::uint32_t i = 0; i < d; ++i) {
        for (std::uint32_t j = 0; j < d; ++j) out.push_back(PauliLabel::single(spec, 0, i, j));
    }
    return out;
}

Eigen::MatrixXcd basis_average(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols() || m.rows() < 2) throw std::invalid_argument("matrix must be d x d");
    const auto d = static_cast<std::uint32_t>(m.rows());
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
    for (std::uint32_t i = 0; i < d; ++i) {
        for (std::uint32_t j = 0; j < d; ++j) {
            const Eigen::MatrixXcd u = single_node_pauli(d, i, j);
            acc += u.adjoint() * m * u;
        }
    }
    return acc / static_cast<double>(d * d);
}

std::string render_label(const PauliLabel& label) {
    std::string out;
    for (std::size_t node = 0; node < label.nodes(); ++node) {
        if (node) out += ' ';
        const std::uint32_t a = label.a(node), b = label.b(node);
        if (a == 0 && b == 0) {
            out += 'I';
        } else if (label.dim() == 2) {
            out += (a && b) ? 'Y' : (a ? 'X' : 'Z');
        } else {
            if (a) out += "X^" + std::to_string(a);
            if (b) out += "Z^" + std::to_string(b);
        }
    }
    return out;
}

}  // namespace decoupling
