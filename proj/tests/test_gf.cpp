#include <stdexcept>

#include <doctest.h>

#include "decoupling/gf.hpp"

using namespace decoupling;

namespace {

FieldElement fe(const FieldSpec& spec, std::uint32_t v) { return {spec, v}; }

// Exhaustive field-axiom check; the oracle behind the GF(4) table values.
void check_field_axioms(const FieldSpec& spec) {
    const std::uint32_t q = spec.order();
    for (std::uint32_t a = 0; a < q; ++a) {
        CHECK(spec.add(a, 0) == a);
        CHECK(spec.mul(a, 1) == a);
        CHECK(spec.add(a, a) == 0);  // characteristic 2
        for (std::uint32_t b = 0; b < q; ++b) {
            CHECK(spec.add(a, b) == spec.add(b, a));
            CHECK(spec.mul(a, b) == spec.mul(b, a));
            for (std::uint32_t c = 0; c < q; ++c) {
                CHECK(spec.add(spec.add(a, b), c) == spec.add(a, spec.add(b, c)));
                CHECK(spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c)));
                CHECK(spec.mul(a, spec.add(b, c)) == spec.add(spec.mul(a, b), spec.mul(a, c)));
            }
        }
    }
    for (std::uint32_t a = 1; a < q; ++a) CHECK(spec.mul(a, spec.inv(a)) == 1);
}

}  // namespace

TEST_CASE("canonical moduli are the pinned polynomials") {
    CHECK(FieldSpec::gf4().modulus_bits() == std::vector<int>{1, 1, 1});        // x^2+x+1
    CHECK(FieldSpec::gf16().modulus_bits() == std::vector<int>{1, 1, 0, 0, 1});  // x^4+x+1
    CHECK(FieldSpec::gf4().order() == 4);
    CHECK(FieldSpec::binary(8).order() == 256);
}

TEST_CASE("modulus validation") {
    CHECK_THROWS(FieldSpec(2, {1, 0, 1}));     // x^2+1 = (x+1)^2
    CHECK_THROWS(FieldSpec(2, {1, 1, 0}));     // not monic
    CHECK_THROWS(FieldSpec(2, {1, 1}));        // wrong length
    CHECK_THROWS(FieldSpec(0, {1}));
    CHECK_THROWS(FieldSpec(17, std::vector<int>(18, 1)));
    CHECK_NOTHROW(FieldSpec(3, {1, 1, 0, 1}));  // x^3+x+1
}

TEST_CASE("field axioms hold exhaustively for GF(4) and GF(16)") {
    check_field_axioms(FieldSpec::gf4());
    check_field_axioms(FieldSpec::gf16());
}

TEST_CASE("GF(4) addition matches the paper relation 1+w+W = 0") {
    const FieldSpec f4 = FieldSpec::gf4();
    const FieldElement one = FieldElement::one(f4);
    const FieldElement w = gf4_omega();
    const FieldElement wb = gf4_omega_bar();
    CHECK(one + w == wb);
    CHECK(w + wb == one);
    CHECK(one + w + wb == FieldElement::zero(f4));
    CHECK(FieldElement::zero(f4) + wb == wb);
    for (std::uint32_t v = 0; v < 4; ++v) CHECK(fe(f4, v) + fe(f4, v) == FieldElement::zero(f4));
}

TEST_CASE("GF(4) multiplication table") {
    const FieldElement w = gf4_omega();
    const FieldElement wb = gf4_omega_bar();
    CHECK(w * wb == FieldElement::one(w.spec()));
    CHECK(w * w == wb);
    CHECK(wb * wb == w);
    for (std::uint32_t v = 0; v < 4; ++v) {
        CHECK(FieldElement::one(w.spec()) * fe(w.spec(), v) == fe(w.spec(), v));
    }
}

TEST_CASE("inverses") {
    const FieldSpec f4 = FieldSpec::gf4();
    CHECK(FieldElement::one(f4).inverse() == FieldElement::one(f4));
    CHECK(gf4_omega().inverse() == gf4_omega_bar());
    CHECK_THROWS_AS(FieldElement::zero(f4).inverse(), std::domain_error);

    // Extended-Euclid path (degree > 8) against the defining property.
    const FieldSpec f1024 = FieldSpec::binary(10);
    for (std::uint32_t a = 1; a < f1024.order(); ++a) {
        CHECK(f1024.mul(a, f1024.inv(a)) == 1);
    }
}

TEST_CASE("bits_iso reproduces the F_2^2 <-> F_4 identification") {
    const FieldSpec f4 = FieldSpec::gf4();
    CHECK(bits_iso_inv(f4, {0, 0}) == FieldElement::zero(f4));
    CHECK(bits_iso_inv(f4, {0, 1}) == FieldElement::one(f4));
    CHECK(bits_iso_inv(f4, {1, 0}) == gf4_omega());
    CHECK(bits_iso_inv(f4, {1, 1}) == gf4_omega_bar());
    for (std::uint32_t v = 0; v < 4; ++v) {
        CHECK(bits_iso_inv(f4, bits_iso(fe(f4, v))) == fe(f4, v));
    }
    CHECK_THROWS(bits_iso_inv(f4, {1, 0, 0}));
    CHECK_THROWS(bits_iso_inv(f4, {2, 0}));
}

TEST_CASE("bits_iso is additive") {
    for (unsigned e : {1u, 2u, 3u, 4u}) {
        const FieldSpec spec = FieldSpec::binary(e);
        for (std::uint32_t a = 0; a < spec.order(); ++a) {
            for (std::uint32_t b = 0; b < spec.order(); ++b) {
                const auto ia = bits_iso(fe(spec, a));
                const auto ib = bits_iso(fe(spec, b));
                const auto isum = bits_iso(fe(spec, a) + fe(spec, b));
                for (unsigned i = 0; i < e; ++i) CHECK(isum[i] == (ia[i] ^ ib[i]));
            }
        }
    }
}

TEST_CASE("operations reject mixed fields") {
    const FieldElement a = FieldElement::one(FieldSpec::gf4());
    const FieldElement b = FieldElement::one(FieldSpec::gf16());
    CHECK_THROWS_WITH_AS(a + b, "field mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS(a * b, "field mismatch", std::invalid_argument);
}

TEST_CASE("rendering") {
    const FieldSpec f4 = FieldSpec::gf4();
    CHECK(to_string(fe(f4, 0)) == "0");
    CHECK(to_string(fe(f4, 1)) == "1");
    CHECK(to_string(gf4_omega()) == "w");
    CHECK(to_string(gf4_omega_bar()) == "W");
    const FieldSpec f16 = FieldSpec::gf16();
    CHECK(to_string(fe(f16, 10)) == "a");
    CHECK(to_string(fe(f16, 3)) == "3");
}

TEST_CASE("element range checked") {
    CHECK_THROWS(fe(FieldSpec::gf4(), 4));
}
