#include "decoupling/gf.hpp"

#include <stdexcept>

namespace decoupling {

namespace {

int poly_degree(std::uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t divisor) {
    const int dd = poly_degree(divisor);
    for (int da = poly_degree(a); da >= dd; da = poly_degree(a)) {
        a ^= divisor << (da - dd);
    }
    return a;
}

bool poly_irreducible(std::uint32_t p, unsigned degree) {
    // Exhaustive trial division by every monic polynomial of degree
    // 1..degree/2; sufficient and exact for degree <= 16.
    for (unsigned dg = 1; dg <= degree / 2; ++dg) {
        const std::uint32_t top = 1u << dg;
        for (std::uint32_t low = 0; low < top; ++low) {
            if (poly_mod(p, top | low) == 0) return false;
        }
    }
    return true;
}

}  // namespace

FieldSpec::FieldSpec(unsigned degree, const std::vector<int>& modulus_bits) : degree_(degree) {
    if (degree < 1 || degree > max_degree) {
        throw std::invalid_argument("field degree must be in [1, 16]");
    }
    if (modulus_bits.size() != degree + 1) {
        throw std::invalid_argument("modulus must have degree+1 coefficients");
    }
    modulus_ = 0;
    for (unsigned i = 0; i <= degree; ++i) {
        if (modulus_bits[i] != 0 && modulus_bits[i] != 1) {
            throw std::invalid_argument("modulus coefficients must be bits");
        }
        modulus_ |= static_cast<std::uint32_t>(modulus_bits[i]) << i;
    }
    if (!(modulus_ >> degree)) {
        throw std::invalid_argument("modulus must be monic");
    }
    if (!poly_irreducible(modulus_, degree)) {
        throw std::invalid_argument("modulus is reducible over F_2");
    }
}

FieldSpec FieldSpec::binary(unsigned degree) {
    if (degree < 1 || degree > max_degree) {
        throw std::invalid_argument("field degree must be in [1, 16]");
    }
    const std::uint32_t top = 1u << degree;
    for (std::uint32_t low = 0; low < top; ++low) {
        if (poly_irreducible(top | low, degree)) {
            std::vector<int> bits(degree + 1);
            for (unsigned i = 0; i <= degree; ++i) bits[i] = ((top | low) >> i) & 1;
            return FieldSpec(degree, bits);
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldSpec FieldSpec::gf4() { return binary(2); }

FieldSpec FieldSpec::gf16() { return binary(4); }

std::vector<int> FieldSpec::modulus_bits() const {
    std::vector<int> bits(degree_ + 1);
    for (unsigned i = 0; i <= degree_; ++i) bits[i] = (modulus_ >> i) & 1;
    return bits;
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
    // Carry-less product, then reduction; the product of two degree-<16
    // polynomials fits in 32 bits.
    std::uint32_t prod = 0;
    while (b) {
        if (b & 1) prod ^= a;
        a <<= 1;
        b >>= 1;
    }
    for (int d = poly_degree(prod); d >= static_cast<int>(degree_); d = poly_degree(prod)) {
        prod ^= modulus_ << (d - degree_);
    }
    return prod;
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    if (degree_ <= 8) {
        for (std::uint32_t b = 1; b < order(); ++b) {
            if (mul(a, b) == 1) return b;
        }
        throw std::logic_error("inverse not found");  // unreachable in a field
    }
    // Extended Euclid on polynomials for the larger fields.
    std::uint32_t r0 = modulus_, r1 = a;
    std::uint32_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::uint32_t q = 0, r = r0;
        int dr1 = poly_degree(r1);
        for (int d = poly_degree(r); d >= dr1; d = poly_degree(r)) {
            q ^= 1u << (d - dr1);
            r ^= r1 << (d - dr1);
        }
        r0 = r1;
        r1 = r;
        // s update uses the polynomial product without field reduction.
        std::uint32_t qs = 0, x = s1, m = q;
        while (m) {
            if (m & 1) qs ^= x;
            x <<= 1;
            m >>= 1;
        }
        const std::uint32_t s = s0 ^ qs;
        s0 = s1;
        s1 = s;
    }
    return poly_mod(s0, modulus_);
}

FieldElement::FieldElement(const FieldSpec& spec, std::uint32_t value) : spec_(spec), value_(value) {
    if (value >= spec.order()) {
        throw std::invalid_argument("element value out of field range");
    }
}

std::vector<int> FieldElement::bits() const {
    std::vector<int> out(spec_.degree());
    for (unsigned i = 0; i < spec_.degree(); ++i) out[i] = (value_ >> i) & 1;
    return out;
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    if (spec_ != other.spec_) throw std::invalid_argument("field mismatch");
    return {spec_, spec_.add(value_, other.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    if (spec_ != other.spec_) throw std::invalid_argument("field mismatch");
    return {spec_, spec_.mul(value_, other.value_)};
}

FieldElement FieldElement::inverse() const { return {spec_, spec_.inv(value_)}; }

std::vector<int> bits_iso(const FieldElement& a) {
    const unsigned e = a.spec().degree();
    std::vector<int> out(e);
    for (unsigned i = 0; i < e; ++i) out[i] = (a.value() >> (e - 1 - i)) & 1;
    return out;
}

FieldElement bits_iso_inv(const FieldSpec& spec, const std::vector<int>& bits) {
    const unsigned e = spec.degree();
    if (bits.size() != e) throw std::invalid_argument("wrong bit-vector length");
    std::uint32_t value = 0;
    for (unsigned i = 0; i < e; ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("bit vector entries must be bits");
        value |= static_cast<std::uint32_t>(bits[i]) << (e - 1 - i);
    }
    return {spec, value};
}

FieldElement gf4_omega() { return {FieldSpec::gf4(), 2}; }

FieldElement gf4_omega_bar() { return {FieldSpec::gf4(), 3}; }

std::string to_string(const FieldElement& a) {
    if (a.spec() == FieldSpec::gf4()) {
        static const char* names[4] = {"0", "1", "w", "W"};
        return names[a.value()];
    }
    static const char* digits = "0123456789abcdef";
    std::string out;
    std::uint32_t v = a.value();
    do {
        out.insert(out.begin(), digits[v & 0xf]);
        v >>= 4;
    } while (v);
    return out;
}

}  // namespace decoupling
