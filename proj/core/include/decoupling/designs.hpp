#pragma once

// Orthogonal arrays OA(N, n, s, t): construction from linear codes
// (codewords as columns; strength = dual minimum distance - 1) and an
// exhaustive strength verifier that doubles as the design oracle.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "decoupling/codes.hpp"

namespace decoupling {

struct OrthogonalArray {
    std::uint32_t symbols = 0;   // s
    std::size_t factors = 0;     // n rows
    std::size_t runs = 0;        // N columns
    unsigned strength = 0;       // claimed t
    std::uint64_t index = 1;     // lambda = N / s^t
    std::vector<std::uint32_t> cells;  // row-major factors x runs

    std::uint32_t at(std::size_t row, std::size_t col) const {
        return cells[row * runs + col];
    }
    std::uint32_t& at(std::size_t row, std::size_t col) { return cells[row * runs + col]; }
};

struct StrengthWitness {
    std::vector<std::size_t> rows;     // offending row subset (lex least)
    std::vector<std::uint32_t> tuple;  // offending symbol tuple
    std::uint64_t count = 0;
    std::uint64_t expected = 0;
};

struct StrengthReport {
    bool pass = false;
    std::uint64_t lambda = 0;  // N / s^t when pass
    std::optional<StrengthWitness> witness;
};

// Default per-call budget for verify_strength, measured in elementary
// count updates C(n,t) * N. Pass cost_cap = 0 to lift the cap.
inline constexpr std::uint64_t kStrengthCostCap = 100'000'000;

// Columns are all q^k codewords of `code` through `symbol_map`; claimed
// strength is d(dual) - 1 computed with the brute-force codes oracle.
// `column_order`, when given, permutes columns by message rank (the
// compiler orders them along a Hamilton cycle).
OrthogonalArray oa_from_code(
    const LinearCode& code,
    const std::vector<std::uint64_t>& column_order = {},
    const std::function<std::uint32_t(const FieldElement&)>& symbol_map = {});

// Exhaustively counts every t-tuple in every t-row subset. Passes iff all
// counts equal N / s^t. Failure reports the lexicographically least
// offending row subset and its least offending tuple.
StrengthReport verify_strength(const OrthogonalArray& array, unsigned t,
                               std::uint64_t cost_cap = kStrengthCostCap);

// Plain-text export: header "OA N n s t lambda", then n rows of N
// space-separated symbols.
std::string oa_to_text(const OrthogonalArray& array);

}  // namespace decoupling
