#include "decoupling/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace decoupling {

namespace {

constexpr std::uint64_t kSupportSearchCap = 1ull << 22;
constexpr std::uint64_t kConstructionCap = 1ull << 24;

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > UINT64_MAX / base) throw std::overflow_error("q^k overflows 64 bits");
        out *= base;
    }
    return out;
}

struct Rref {
    std::vector<std::uint32_t> mat;  // row-major rows x cols
    std::vector<std::size_t> pivots;
};

// In-place reduced row echelon form over GF(q); returns pivot columns.
Rref rref(const FieldSpec& spec, std::vector<std::uint32_t> mat, std::size_t rows,
          std::size_t cols) {
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && mat[piv * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(mat[piv * cols + j], mat[row * cols + j]);
            }
        }
        const std::uint32_t scale = spec.inv(mat[row * cols + col]);
        for (std::size_t j = 0; j < cols; ++j) {
            mat[row * cols + j] = spec.mul(scale, mat[row * cols + j]);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row) continue;
            const std::uint32_t f = mat[r * cols + col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                mat[r * cols + j] ^= spec.mul(f, mat[row * cols + j]);
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.mat = std::move(mat);
    return out;
}

std::size_t matrix_rank(const FieldSpec& spec, std::vector<std::uint32_t> mat, std::size_t rows,
                        std::size_t cols) {
    return rref(spec, std::move(mat), rows, cols).pivots.size();
}

}  // namespace

LinearCode::LinearCode(const FieldSpec& spec, std::size_t n, std::size_t k,
                       std::vector<std::uint32_t> gen)
    : spec_(spec), n_(n), k_(k), gen_(std::move(gen)) {
    if (n == 0) throw std::invalid_argument("code length must be positive");
    if (k > n) throw std::invalid_argument("code dimension exceeds length");
    if (gen_.size() != n * k) throw std::invalid_argument("generator matrix shape mismatch");
    for (std::uint32_t v : gen_) {
        if (v >= spec.order()) throw std::invalid_argument("generator entry out of field range");
    }
    if (matrix_rank(spec_, gen_, k_, n_) != k_) {
        throw std::invalid_argument("generator rows are linearly dependent");
    }
}

LinearCode LinearCode::from_rows(const FieldSpec& spec,
                                 const std::vector<std::vector<FieldElement>>& rows,
                                 std::size_t n) {
    std::vector<std::uint32_t> gen;
    gen.reserve(rows.size() * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("generator row length mismatch");
        for (const auto& e : row) {
            if (e.spec() != spec) throw std::invalid_argument("field mismatch");
            gen.push_back(e.value());
        }
    }
    return LinearCode(spec, n, rows.size(), std::move(gen));
}

std::uint64_t LinearCode::num_codewords() const { return checked_pow(spec_.order(), k_); }

FieldElement LinearCode::generator_entry(std::size_t row, std::size_t col) const {
    return {spec_, gen_.at(row * n_ + col)};
}

std::vector<FieldElement> LinearCode::encode(const std::vector<FieldElement>& message) const {
    if (message.size() != k_) throw std::invalid_argument("message length must equal k");
    std::vector<FieldElement> out;
    out.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < k_; ++i) {
            if (message[i].spec() != spec_) throw std::invalid_argument("field mismatch");
            acc ^= spec_.mul(message[i].value(), gen_[i * n_ + j]);
        }
        out.emplace_back(spec_, acc);
    }
    return out;
}

void LinearCode::for_each_codeword(
    const std::function<void(const std::vector<std::uint32_t>&)>& fn) const {
    const std::uint64_t total = num_codewords();
    if (total > kEnumerationCap) throw std::length_error("codeword enumeration cap exceeded");
    const std::uint32_t q = spec_.order();
    std::vector<std::uint32_t> digits(k_, 0);
    std::vector<std::uint32_t> cw(n_, 0);
    fn(cw);
    for (std::uint64_t c = 1; c < total; ++c) {
        // Odometer increment; a digit change from u to v adds (u^v)*row.
        std::size_t p = k_;
        while (p > 0 && digits[p - 1] == q - 1) {
            --p;
            const std::uint32_t delta = digits[p];  // old ^ 0
            digits[p] = 0;
            for (std::size_t j = 0; j < n_; ++j) cw[j] ^= spec_.mul(delta, gen_[p * n_ + j]);
        }
        --p;
        const std::uint32_t delta = digits[p] ^ (digits[p] + 1);
        ++digits[p];
        for (std::size_t j = 0; j < n_; ++j) cw[j] ^= spec_.mul(delta, gen_[p * n_ + j]);
        fn(cw);
    }
}

std::vector<std::vector<std::uint32_t>> LinearCode::enumerate_codewords() const {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(num_codewords());
    for_each_codeword([&](const std::vector<std::uint32_t>& cw) { out.push_back(cw); });
    return out;
}

std::vector<std::vector<std::uint32_t>> LinearCode::enumerate_codewords(
    const std::vector<std::uint64_t>& message_order) const {
    const std::uint64_t total = num_codewords();
    if (total > kEnumerationCap) throw std::length_error("codeword enumeration cap exceeded");
    if (message_order.size() != total) {
        throw std::invalid_argument("message order must list every message exactly once");
    }
    std::vector<bool> seen(total, false);
    const std::uint32_t q = spec_.order();
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(total);
    for (std::uint64_t rank : message_order) {
        if (rank >= total || seen[rank]) {
            throw std::invalid_argument("message order must be a permutation");
        }
        seen[rank] = true;
        std::vector<std::uint32_t> cw(n_, 0);
        std::uint64_t r = rank;
        for (std::size_t i = k_; i-- > 0;) {
            const auto digit = static_cast<std::uint32_t>(r % q);
            r /= q;
            if (digit == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) cw[j] ^= spec_.mul(digit, gen_[i * n_ + j]);
        }
        out.push_back(std::move(cw));
    }
    return out;
}

bool LinearCode::operator==(const LinearCode& other) const {
    return spec_ == other.spec_ && n_ == other.n_ && k_ == other.k_ && gen_ == other.gen_;
}

LinearCode dual_code(const LinearCode& code) {
    const FieldSpec& spec = code.field();
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const Rref red = rref(spec, code.generator_values(), k, n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;

    // One basis vector per free column: x_free = 1, x_pivot_i = R[i][free]
    // (characteristic 2, so negation is a no-op).
    std::vector<std::uint32_t> dual_gen;
    dual_gen.reserve((n - k) * n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint32_t> v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < red.pivots.size(); ++i) {
            v[red.pivots[i]] = red.mat[i * n + f];
        }
        dual_gen.insert(dual_gen.end(), v.begin(), v.end());
    }
    return LinearCode(spec, n, n - k, std::move(dual_gen));
}

namespace {

unsigned min_distance_by_enumeration(const LinearCode& code) {
    unsigned best = static_cast<unsigned>(code.length()) + 1;
    bool first = true;
    code.for_each_codeword([&](const std::vector<std::uint32_t>& cw) {
        if (first) {  // the all-zero word leads the enumeration
            first = false;
            return;
        }
        unsigned w = 0;
        for (std::uint32_t v : cw) w += (v != 0);
        best = std::min(best, w);
    });
    return best;
}

// Smallest w such that some w columns of the parity-check matrix are
// linearly dependent; that is exactly the minimum weight of the code.
unsigned min_distance_by_support_search(const LinearCode& code) {
    const FieldSpec& spec = code.field();
    const std::size_t n = code.length();
    const LinearCode parity = dual_code(code);
    const std::size_t rows = parity.dimension();
    const auto& pgen = parity.generator_values();

    std::uint64_t budget = kSupportSearchCap;
    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<std::size_t> combo(w);
        for (std::size_t i = 0; i < w; ++i) combo[i] = i;
        while (true) {
            if (budget-- == 0) throw std::length_error("minimum distance search cap exceeded");
            std::vector<std::uint32_t> sub(rows * w);
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < w; ++c) sub[r * w + c] = pgen[r * n + combo[c]];
            }
            if (matrix_rank(spec, std::move(sub), rows, w) < w) {
                return static_cast<unsigned>(w);
            }
            // next lexicographic combination
            std::size_t i = w;
            while (i > 0 && combo[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < w; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    throw std::logic_error("no dependent column set found");  // unreachable for k >= 1
}

}  // namespace

unsigned min_distance(const LinearCode& code) {
    if (code.dimension() == 0) throw std::domain_error("zero code has no minimum distance");
    std::uint64_t total = 1;
    bool enumerable = true;
    for (std::size_t i = 0; i < code.dimension() && enumerable; ++i) {
        total *= code.field().order();
        if (total > kEnumerationCap) enumerable = false;
    }
    return enumerable ? min_distance_by_enumeration(code) : min_distance_by_support_search(code);
}

CodeParams code_params(const LinearCode& code) {
    return {code.length(), code.dimension(), min_distance(code)};
}

LinearCode simplex_code(std::uint32_t q, unsigned m) {
    unsigned e = 0;
    while ((1u << e) < q && e < FieldSpec::max_degree) ++e;
    if ((1u << e) != q) throw std::invalid_argument("unsupported field order (need q = 2^e, e <= 16)");
    if (m < 2) throw std::invalid_argument("Hamming/simplex construction needs m >= 2");
    if (checked_pow(q, m) > kConstructionCap) {
        throw std::length_error("Hamming/simplex construction cap exceeded");
    }
    const FieldSpec spec = FieldSpec::binary(e);

    // Columns: one representative per projective point, first nonzero
    // entry = 1, in lexicographic order.
    std::vector<std::vector<std::uint32_t>> cols;
    std::vector<std::uint32_t> v(m, 0);
    while (true) {
        std::size_t i = m;
        while (i > 0 && v[i - 1] == q - 1) v[--i] = 0;
        if (i == 0) break;
        ++v[i - 1];
        std::uint32_t lead = 0;
        for (std::uint32_t x : v) {
            if (x != 0) {
                lead = x;
                break;
            }
        }
        if (lead == 1) cols.push_back(v);
    }
    const std::size_t n = cols.size();
    std::vector<std::uint32_t> gen(m * n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) gen[r * n + c] = cols[c][r];
    }
    return LinearCode(spec, n, m, std::move(gen));
}

LinearCode hamming_code(std::uint32_t q, unsigned m) { return dual_code(simplex_code(q, m)); }

LinearCode qr5_code() {
    const FieldSpec f4 = FieldSpec::gf4();
    // [[1,0,1,W,W],[0,1,W,W,1]]
    return LinearCode(f4, 5, 2, {1, 0, 1, 3, 3, 0, 1, 3, 3, 1});
}

}  // namespace decoupling
