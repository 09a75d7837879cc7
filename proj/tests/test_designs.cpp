#include <numeric>
#include <random>

#include <stdexcept>

#include <doctest.h>

#include "decoupling/designs.hpp"

using namespace decoupling;

namespace {

OrthogonalArray shuffled_columns(const OrthogonalArray& a, std::uint64_t seed) {
    std::vector<std::size_t> perm(a.runs);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    OrthogonalArray out = a;
    for (std::size_t r = 0; r < a.factors; ++r) {
        for (std::size_t c = 0; c < a.runs; ++c) out.at(r, c) = a.at(r, perm[c]);
    }
    return out;
}

}  // namespace

TEST_CASE("the qr5 array is an OA(16,5,4,2) with index 1") {
    const OrthogonalArray a = oa_from_code(qr5_code());
    CHECK(a.runs == 16);
    CHECK(a.factors == 5);
    CHECK(a.symbols == 4);
    CHECK(a.strength == 2);
    CHECK(a.index == 1);

    const StrengthReport r2 = verify_strength(a, 2);
    CHECK(r2.pass);
    CHECK(r2.lambda == 1);

    // 16 columns cannot cover all 4^3 triples.
    const StrengthReport r3 = verify_strength(a, 3);
    CHECK_FALSE(r3.pass);
    REQUIRE(r3.witness.has_value());
    CHECK(r3.witness->rows.size() == 3);
}

TEST_CASE("simplex(4,3) gives an OA(64,21,4,2) with index 4") {
    const OrthogonalArray a = oa_from_code(simplex_code(4, 3));
    CHECK(a.runs == 64);
    CHECK(a.factors == 21);
    CHECK(a.strength == 2);
    CHECK(a.index == 4);
    const StrengthReport r = verify_strength(a, 2);
    CHECK(r.pass);
    CHECK(r.lambda == 4);
}

TEST_CASE("degenerate codes are rejected") {
    const FieldSpec f2 = FieldSpec::binary(1);
    const LinearCode full(f2, 1, 1, {1});  // dual is the zero code
    CHECK_THROWS(oa_from_code(full));
    CHECK_THROWS(oa_from_code(LinearCode(f2, 3, 0, {})));
}

TEST_CASE("single-row array passes strength 1") {
    OrthogonalArray a;
    a.symbols = 5;
    a.factors = 1;
    a.runs = 5;
    a.strength = 1;
    a.index = 1;
    a.cells = {0, 1, 2, 3, 4};
    const StrengthReport r = verify_strength(a, 1);
    CHECK(r.pass);
    CHECK(r.lambda == 1);
}

TEST_CASE("strength is monotone with index scaling") {
    const OrthogonalArray a = oa_from_code(qr5_code());
    const StrengthReport r1 = verify_strength(a, 1);
    CHECK(r1.pass);
    CHECK(r1.lambda == 4);  // lambda' = lambda * s^(t - t')
}

TEST_CASE("theorem round-trip: strength = dual distance - 1 for the paper codes") {
    const LinearCode cases[] = {qr5_code(), simplex_code(4, 2), simplex_code(4, 3),
                                hamming_code(2, 3)};
    for (const LinearCode& code : cases) {
        const unsigned dperp = min_distance(dual_code(code));
        const OrthogonalArray a = oa_from_code(code);
        CHECK(a.strength == dperp - 1);
        CHECK(verify_strength(a, dperp - 1).pass);
    }
}

TEST_CASE("verification is invariant under column permutations") {
    const OrthogonalArray a = oa_from_code(qr5_code());
    for (std::uint64_t seed : {11u, 12u, 13u, 14u, 15u}) {
        const OrthogonalArray shuffled = shuffled_columns(a, seed);
        CHECK(verify_strength(shuffled, 2).pass);
        CHECK_FALSE(verify_strength(shuffled, 3).pass);
    }
}

TEST_CASE("failure witness is deterministic and lexicographically least") {
    OrthogonalArray a;
    a.symbols = 2;
    a.factors = 3;
    a.runs = 4;
    a.strength = 2;
    a.index = 1;
    // rows 0 and 2 are identical, so {0, 2} fails but {0, 1} passes.
    a.cells = {0, 0, 1, 1,
               0, 1, 0, 1,
               0, 0, 1, 1};
    const StrengthReport r = verify_strength(a, 2);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->rows == std::vector<std::size_t>{0, 2});
    CHECK(r.witness->tuple == std::vector<std::uint32_t>{0, 0});
    CHECK(r.witness->count == 2);
    CHECK(r.witness->expected == 1);
}

TEST_CASE("cost cap") {
    const OrthogonalArray a = oa_from_code(simplex_code(4, 3));
    CHECK_THROWS_AS(verify_strength(a, 2, 10), std::length_error);
    CHECK(verify_strength(a, 2, 0).pass);  // 0 lifts the cap
}

TEST_CASE("column order parameter feeds through") {
    std::vector<std::uint64_t> reversed(16);
    for (std::size_t i = 0; i < 16; ++i) reversed[i] = 15 - i;
    const OrthogonalArray a = oa_from_code(qr5_code());
    const OrthogonalArray b = oa_from_code(qr5_code(), reversed);
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 16; ++c) CHECK(b.at(r, c) == a.at(r, 15 - c));
    }
    CHECK(verify_strength(b, 2).pass);
}

TEST_CASE("text export") {
    const std::string text = oa_to_text(oa_from_code(qr5_code()));
    CHECK(text.substr(0, text.find('\n')) == "OA 16 5 4 2 1");
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);  // header + 5 rows
}

TEST_CASE("symbol map must be a bijection") {
    CHECK_THROWS(oa_from_code(qr5_code(), {}, [](const FieldElement&) { return 0u; }));
    const auto swap_map = [](const FieldElement& e) {
        return e.value() == 2 ? 3u : e.value() == 3 ? 2u : e.value();
    };
    CHECK(verify_strength(oa_from_code(qr5_code(), {}, swap_map), 2).pass);
}
