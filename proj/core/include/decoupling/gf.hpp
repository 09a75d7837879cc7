#pragma once

// Exact arithmetic in binary extension fields GF(2^e), e <= 16.
//
// Elements are residue classes of F_2[x] modulo a fixed monic irreducible
// polynomial. The packed representation stores coefficients with the
// constant term in bit 0, so the integer value of an element doubles as
// its canonical symbol index (0, 1, w, W <-> 0, 1, 2, 3 in GF(4)).

#include <cstdint>
#include <string>
#include <vector>

namespace decoupling {

class FieldSpec {
  public:
    // modulus_bits lists the e+1 coefficients of the modulus polynomial,
    // constant term first; it must be monic and irreducible over F_2.
    FieldSpec(unsigned degree, const std::vector<int>& modulus_bits);

    // Canonical field of degree e: modulus is the irreducible polynomial
    // with the smallest packed encoding (x^2+x+1 for e=2, x^4+x+1 for e=4).
    static FieldSpec binary(unsigned degree);
    static FieldSpec gf4();
    static FieldSpec gf16();

    unsigned degree() const { return degree_; }
    std::uint32_t order() const { return 1u << degree_; }
    std::uint32_t modulus_value() const { return modulus_; }
    std::vector<int> modulus_bits() const;

    // Arithmetic on packed element values (each < order()).
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const FieldSpec& other) const {
        return degree_ == other.degree_ && modulus_ == other.modulus_;
    }
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

    static constexpr unsigned max_degree = 16;

  private:
    unsigned degree_;
    std::uint32_t modulus_;  // packed incl. the monic top bit
};

class FieldElement {
  public:
    FieldElement(const FieldSpec& spec, std::uint32_t value);

    static FieldElement zero(const FieldSpec& spec) { return {spec, 0}; }
    static FieldElement one(const FieldSpec& spec) { return {spec, 1}; }

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    // Coefficient bits of the residue polynomial, constant term first.
    std::vector<int> bits() const;

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement inverse() const;

    bool operator==(const FieldElement& other) const {
        return spec_ == other.spec_ && value_ == other.value_;
    }
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

  private:
    FieldSpec spec_;
    std::uint32_t value_;
};

// The fixed F_2-linear bijection GF(2^e) <-> F_2^e. Bit vectors are written
// highest coefficient first, so in GF(4): (0,0)->0, (0,1)->1, (1,0)->w,
// (1,1)->W.
std::vector<int> bits_iso(const FieldElement& a);
FieldElement bits_iso_inv(const FieldSpec& spec, const std::vector<int>& bits);

// GF(4) conveniences; w is the class of x, W = w^2 = w+1.
FieldElement gf4_omega();
FieldElement gf4_omega_bar();

// "0 1 w W" for GF(4); lowercase hex of the packed value otherwise.
std::string to_string(const FieldElement& a);

}  // namespace decoupling
