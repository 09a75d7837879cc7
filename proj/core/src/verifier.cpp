#include "decoupling/verifier.hpp"

#include <algorithm>
#include <complex>
#include <random>
#include <stdexcept>

namespace decoupling {

namespace {

using cd = std::complex<double>;

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t out = 1;
    while (exp--) out *= base;
    return out;
}

// Full-system label with `cell_label` (packed base d^2) on one cell.
PauliLabel cell_label(const NodeSpec& spec, std::uint32_t block, std::size_t cell,
                      std::uint64_t packed) {
    std::vector<std::array<std::uint32_t, 2>> ops(spec.nodes, {0, 0});
    const std::uint64_t dd = static_cast<std::uint64_t>(spec.dim) * spec.dim;
    for (std::uint32_t p = block; p-- > 0;) {
        const auto digit = static_cast<std::uint32_t>(packed % dd);
        packed /= dd;
        ops[cell * block + p] = {digit / spec.dim, digit % spec.dim};
    }
    return {spec, std::move(ops)};
}

Eigen::MatrixXcd pairwise_tree_sum(std::vector<Eigen::MatrixXcd>& terms) {
    if (terms.empty()) throw std::invalid_argument("nothing to sum");
    std::size_t len = terms.size();
    while (len > 1) {
        const std::size_t half = len / 2;
        for (std::size_t i = 0; i < half; ++i) terms[i] += terms[len - 1 - i];
        len -= half;
    }
    return terms[0];
}

}  // namespace

std::uint64_t PairHamiltonian::labels_per_cell() const {
    return pow_u64(static_cast<std::uint64_t>(spec.dim) * spec.dim, block);
}

PairHamiltonian random_pair_hamiltonian(const NodeSpec& spec, std::uint64_t seed,
                                        std::uint32_t block) {
    if (block < 1 || spec.nodes % block != 0) {
        throw std::invalid_argument("block must divide the node count");
    }
    PairHamiltonian h;
    h.spec = spec;
    h.block = block;
    const std::size_t cells = h.cells();
    const std::uint64_t labels = h.labels_per_cell();
    const std::uint64_t pairs = cells * (cells - 1) / 2;
    if (labels > (1u << 16) || pairs * (labels - 1) * (labels - 1) > (1u << 24)) {
        throw std::length_error("coefficient tables too large");
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    h.local.resize(cells);
    for (auto& table : h.local) {
        table.resize(labels - 1);
        for (auto& c : table) c = {unit(rng), unit(rng)};
    }
    h.coupling.resize(cells * (cells - 1) / 2);
    for (auto& table : h.coupling) {
        table.resize((labels - 1) * (labels - 1));
        for (auto& c : table) c = {unit(rng), unit(rng)};
    }
    return h;
}

Eigen::MatrixXcd hamiltonian_matrix(const PairHamiltonian& h) {
    const auto dim = static_cast<Eigen::Index>(total_dimension(h.spec));
    const std::size_t cells = h.cells();
    const std::uint64_t labels = h.labels_per_cell();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);

    const auto add_term = [&](const PauliLabel& label, double herm, double anti) {
        if (herm == 0.0 && anti == 0.0) return;
        const Eigen::MatrixXcd b = label_matrix(h.spec, label);
        const Eigen::MatrixXcd bdag = b.adjoint();
        out += (0.5 * herm) * (b + bdag);
        out += (cd(0.0, 0.5) * anti) * (b - bdag);
    };

    for (std::size_t cell = 0; cell < cells; ++cell) {
        if (h.local[cell].size() != labels - 1) throw std::invalid_argument("local table shape");
        for (std::uint64_t l = 1; l < labels; ++l) {
            const auto& c = h.local[cell][l - 1];
            add_term(cell_label(h.spec, h.block, cell, l), c[0], c[1]);
        }
    }
    std::size_t pair = 0;
    for (std::size_t i = 0; i < cells; ++i) {
        for (std::size_t j = i + 1; j < cells; ++j, ++pair) {
            const auto& table = h.coupling[pair];
            if (table.size() != (labels - 1) * (labels - 1)) {
                throw std::invalid_argument("coupling table shape");
            }
            for (std::uint64_t la = 1; la < labels; ++la) {
                for (std::uint64_t lb = 1; lb < labels; ++lb) {
                    const auto& c = table[(la - 1) * (labels - 1) + (lb - 1)];
                    if (c[0] == 0.0 && c[1] == 0.0) continue;
                    const PauliLabel label =
                        cell_label(h.spec, h.block, i, la) + cell_label(h.spec, h.block, j, lb);
                    add_term(label, c[0], c[1]);
                }
            }
        }
    }
    return out;
}

Eigen::MatrixXcd average_hamiltonian(const PulseSchedule& schedule, const PairHamiltonian& h) {
    if (schedule.spec != h.spec || schedule.block != h.block) {
        throw std::invalid_argument("schedule and Hamiltonian describe different systems");
    }
    const Eigen::MatrixXcd m = hamiltonian_matrix(h);
    std::vector<Eigen::MatrixXcd> terms;
    terms.reserve(schedule.frames.size());
    for (const PauliLabel& frame : schedule.frames) {
        const Eigen::MatrixXcd u = label_matrix(schedule.spec, frame);
        terms.push_back(u.adjoint() * m * u);
    }
    return pairwise_tree_sum(terms) / static_cast<double>(schedule.frames.size());
}

DecouplingReport verify_decoupling(const PulseSchedule& schedule, const PairHamiltonian& h,
                                   double tol) {
    const double hnorm = hamiltonian_matrix(h).norm();
    DecouplingReport report;
    if (hnorm == 0.0) {
        report.residual = 0.0;
        report.pass = true;
        return report;
    }
    report.residual = average_hamiltonian(schedule, h).norm() / hnorm;
    report.pass = report.residual <= tol;
    return report;
}

PairwiseReport pairwise_verify(const PulseSchedule& schedule) {
    const OrthogonalArray table = frame_symbol_table(schedule);
    const std::size_t n = table.factors;
    const std::size_t N = table.runs;
    const std::uint64_t s = table.symbols;

    PairwiseReport report;
    report.lambda_single = N / s;
    report.lambda_pair = N / (s * s);

    const auto fail = [&](std::size_t a, std::size_t b, std::vector<std::uint32_t> combo,
                          std::uint64_t count, std::uint64_t expected) {
        report.pass = false;
        report.witness = PairwiseFailure{a, b, std::move(combo), count, expected};
        return report;
    };

    // With N not divisible by s (or s^2) some count necessarily misses the
    // rounded-down target, so the scan below still produces a witness.
    std::vector<std::uint64_t> counts;
    for (std::size_t i = 0; i < n; ++i) {
        counts.assign(s, 0);
        for (std::size_t c = 0; c < N; ++c) ++counts[table.at(i, c)];
        for (std::uint64_t v = 0; v < s; ++v) {
            if (counts[v] != report.lambda_single) {
                return fail(i, i, {static_cast<std::uint32_t>(v)}, counts[v],
                            report.lambda_single);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            ++report.pairs_checked;
            counts.assign(s * s, 0);
            for (std::size_t c = 0; c < N; ++c) ++counts[table.at(i, c) * s + table.at(j, c)];
            for (std::uint64_t v = 0; v < s * s; ++v) {
                if (counts[v] != report.lambda_pair) {
                    return fail(i, j,
                                {static_cast<std::uint32_t>(v / s),
                                 static_cast<std::uint32_t>(v % s)},
                                counts[v], report.lambda_pair);
                }
            }
        }
    }
    report.pass = true;
    return report;
}

SequenceTimes SequenceTimes::uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty schedule");
    return {std::vector<double>(n, 1.0 / static_cast<double>(n))};
}

EquivalenceReport sequence_equivalence(const PulseSchedule& schedule, const PairHamiltonian& h,
                                       const SequenceTimes& times, double tol) {
    const std::size_t N = schedule.sequence.size();
    if (times.taus.size() != N) throw std::invalid_argument("times/sequence length mismatch");
    for (double t : times.taus) {
        if (!(t > 0.0)) throw std::invalid_argument("times must be positive");
    }
    if (schedule.frames.size() != N) throw std::invalid_argument("frames/sequence length mismatch");

    const Eigen::MatrixXcd m = hamiltonian_matrix(h);
    const Eigen::Index dim = m.rows();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((m + m.adjoint()) / 2.0);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const Eigen::MatrixXcd& vecs = es.eigenvectors();
    const Eigen::VectorXd& vals = es.eigenvalues();

    const auto evolution = [&](double tau) -> Eigen::MatrixXcd {
        Eigen::VectorXcd phases(dim);
        for (Eigen::Index i = 0; i < dim; ++i) phases(i) = std::polar(1.0, -tau * vals(i));
        return vecs * phases.asDiagonal() * vecs.adjoint();
    };

    // Pulse form: evolve tau_i in place, then apply the i-th pulse; the
    // closure requirement brings the frame back to the identity.
    Eigen::MatrixXcd pulse_form = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t i = 0; i < N; ++i) {
        const Eigen::MatrixXcd v =
            label_matrix(schedule.spec, schedule.pulses.at(schedule.sequence[i]));
        pulse_form = v * evolution(times.taus[i]) * pulse_form;
    }
    // Toggling-frame form: each interval conjugated by its frame.
    Eigen::MatrixXcd frame_form = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t i = 0; i < N; ++i) {
        const Eigen::MatrixXcd u = label_matrix(schedule.spec, schedule.frames[i]);
        frame_form = u.adjoint() * evolution(times.taus[i]) * u * frame_form;
    }

    const cd overlap = (pulse_form.adjoint() * frame_form).trace();
    EquivalenceReport report;
    if (std::abs(overlap) < 1e-300) {
        report.distance = (pulse_form - frame_form).norm();
    } else {
        const cd phase = std::conj(overlap) / std::abs(overlap);
        report.distance = (pulse_form - phase * frame_form).norm();
    }
    report.pass = report.distance <= tol;
    return report;
}

}  // namespace decoupling
