#pragma once

// Linear codes over GF(q): construction, codeword enumeration, dual codes,
// and brute-force minimum distance. The minimum-distance routine is the
// trusted oracle behind the orthogonal-array strengths, so it never takes
// algebraic shortcuts: it either enumerates every codeword or exhausts
// column supports of the parity-check matrix in increasing size.

#include <cstdint>
#include <functional>
#include <vector>

#include "decoupling/gf.hpp"

namespace decoupling {

// Hard bound on q^k for full codeword enumeration.
inline constexpr std::uint64_t kEnumerationCap = 1u << 20;

class LinearCode {
  public:
    // gen is row-major k x n over the field; rows must be linearly
    // independent (rank exactly k). k = 0 (the zero code) is allowed.
    LinearCode(const FieldSpec& spec, std::size_t n, std::size_t k,
               std::vector<std::uint32_t> gen);

    static LinearCode from_rows(const FieldSpec& spec,
                                const std::vector<std::vector<FieldElement>>& rows,
                                std::size_t n);

    const FieldSpec& field() const { return spec_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }
    std::uint64_t num_codewords() const;  // q^k, throws past the cap

    FieldElement generator_entry(std::size_t row, std::size_t col) const;
    const std::vector<std::uint32_t>& generator_values() const { return gen_; }

    // message * gen over GF(q); message has k entries.
    std::vector<FieldElement> encode(const std::vector<FieldElement>& message) const;

    // All q^k codewords (packed element values), ordered by the message
    // order induced by `message_order`; default is lexicographic with the
    // first coordinate most significant and symbols in value order.
    std::vector<std::vector<std::uint32_t>> enumerate_codewords() const;
    std::vector<std::vector<std::uint32_t>> enumerate_codewords(
        const std::vector<std::uint64_t>& message_order) const;

    // Visits codewords in lexicographic message order without storing them.
    void for_each_codeword(
        const std::function<void(const std::vector<std::uint32_t>&)>& fn) const;

    bool operator==(const LinearCode& other) const;

  private:
    FieldSpec spec_;
    std::size_t n_;
    std::size_t k_;
    std::vector<std::uint32_t> gen_;  // row-major k x n packed values
};

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    unsigned d_min = 0;
};

// Generator of the null space of code.gen under the plain bilinear form
// sum_i x_i y_i (not a Hermitian form). Deterministic basis from the RREF.
LinearCode dual_code(const LinearCode& code);

// Minimum Hamming weight over all nonzero codewords, by exhaustion.
// Enumerates all q^k codewords when that fits under the cap; otherwise
// searches parity-check column supports of increasing size (exact, still
// brute force, and feasible whenever the dual dimension is small).
unsigned min_distance(const LinearCode& code);

CodeParams code_params(const LinearCode& code);

// Hamming code H_{q,m}: length (q^m-1)/(q-1), parameters [n, n-m, 3]_q.
// The parity-check columns are the projective points of F_q^m, normalized
// so each column's first nonzero entry is 1, in lexicographic order.
LinearCode hamming_code(std::uint32_t q, unsigned m);

// Dual of the Hamming code, parameters [n, m, q^(m-1)]_q.
LinearCode simplex_code(std::uint32_t q, unsigned m);

// The [5,2,4] quadratic residue code over GF(4), exactly the generator
// matrix [[1,0,1,W,W],[0,1,W,W,1]].
LinearCode qr5_code();

}  // namespace decoupling
