#include "decoupling/designs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace decoupling {

namespace {

// Saturates at UINT64_MAX; only used against cost caps.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (out > UINT64_MAX / (n - k + i)) return UINT64_MAX;
        out = out * (n - k + i) / i;  // exact: product of i consecutive ints is divisible by i!
    }
    return out;
}

}  // namespace

OrthogonalArray oa_from_code(const LinearCode& code,
                             const std::vector<std::uint64_t>& column_order,
                             const std::function<std::uint32_t(const FieldElement&)>& symbol_map) {
    if (code.dimension() == 0) throw std::invalid_argument("zero-dimensional code gives no array");
    const LinearCode dual = dual_code(code);
    if (dual.dimension() == 0) {
        throw std::invalid_argument("dual is the zero code; no defined strength");
    }
    const unsigned dperp = min_distance(dual);
    if (dperp < 2) throw std::invalid_argument("dual distance 1 gives strength 0");

    const FieldSpec& spec = code.field();
    const std::uint32_t q = spec.order();
    std::function<std::uint32_t(const FieldElement&)> map = symbol_map;
    if (!map) map = [](const FieldElement& e) { return e.value(); };

    // Any symbol map must be a bijection GF(q) -> [0, q).
    std::vector<bool> hit(q, false);
    for (std::uint32_t v = 0; v < q; ++v) {
        const std::uint32_t s = map(FieldElement(spec, v));
        if (s >= q || hit[s]) throw std::invalid_argument("symbol map is not a bijection onto [0, q)");
        hit[s] = true;
    }

    const auto columns =
        column_order.empty() ? code.enumerate_codewords() : code.enumerate_codewords(column_order);

    OrthogonalArray array;
    array.symbols = q;
    array.factors = code.length();
    array.runs = columns.size();
    array.strength = dperp - 1;
    std::uint64_t st = 1;
    for (unsigned i = 0; i < array.strength; ++i) st *= q;
    array.index = array.runs / st;  // t <= k, so s^t divides q^k
    array.cells.resize(array.factors * array.runs);
    for (std::size_t c = 0; c < array.runs; ++c) {
        for (std::size_t r = 0; r < array.factors; ++r) {
            array.at(r, c) = map(FieldElement(spec, columns[c][r]));
        }
    }
    return array;
}

StrengthReport verify_strength(const OrthogonalArray& array, unsigned t,
                               std::uint64_t cost_cap) {
    const std::size_t n = array.factors;
    const std::size_t N = array.runs;
    const std::uint32_t s = array.symbols;
    if (t < 1 || t > n) throw std::invalid_argument("strength t out of range [1, n]");
    for (std::uint32_t v : array.cells) {
        if (v >= s) throw std::invalid_argument("array entry out of symbol range");
    }

    std::uint64_t st = 1;
    for (unsigned i = 0; i < t; ++i) {
        if (st > (1ull << 26)) throw std::length_error("s^t too large to tabulate");
        st *= s;
    }
    const std::uint64_t nct = binomial(n, t);
    const std::uint64_t cost = (nct > UINT64_MAX / N) ? UINT64_MAX : nct * N;
    if (cost_cap != 0 && cost > cost_cap) {
        throw std::length_error("verify_strength cost cap exceeded (use force to override)");
    }
    const std::uint64_t expected = N / st;  // with a remainder some tuple must deviate

    std::vector<std::uint64_t> counts(st);
    std::vector<std::size_t> combo(t);
    for (unsigned i = 0; i < t; ++i) combo[i] = i;
    while (true) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t c = 0; c < N; ++c) {
            std::uint64_t idx = 0;
            for (unsigned i = 0; i < t; ++i) idx = idx * s + array.at(combo[i], c);
            ++counts[idx];
        }
        for (std::uint64_t idx = 0; idx < st; ++idx) {
            if (counts[idx] == expected) continue;
            StrengthWitness w;
            w.rows = combo;
            w.tuple.resize(t);
            std::uint64_t v = idx;
            for (unsigned i = t; i-- > 0;) {
                w.tuple[i] = static_cast<std::uint32_t>(v % s);
                v /= s;
            }
            w.count = counts[idx];
            w.expected = expected;
            return {false, 0, w};
        }
        // next lexicographic row subset
        std::size_t i = t;
        while (i > 0 && combo[i - 1] == n - t + i - 1) --i;
        if (i == 0) break;
        ++combo[i - 1];
        for (std::size_t j = i; j < t; ++j) combo[j] = combo[j - 1] + 1;
    }
    return {true, expected, std::nullopt};
}

std::string oa_to_text(const OrthogonalArray& array) {
    std::ostringstream out;
    out << "OA " << array.runs << ' ' << array.factors << ' ' << array.symbols << ' '
        << array.strength << ' ' << array.index << '\n';
    for (std::size_t r = 0; r < array.factors; ++r) {
        for (std::size_t c = 0; c < array.runs; ++c) {
            if (c) out << ' ';
            out << array.at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace decoupling
