#pragma once

// Hamilton cycles in the directed Cayley graph of Z_d^k whose generators
// are the k forward coordinate steps (+1 mod d on one coordinate).
//
// The recursive product construction: the k=1 cycle is d steps of the
// single generator; the cycle for Z_d^k repeats, for each edge of the
// Z_d^(k-1) cycle on coordinates 1..k-1, (d-1) steps of coordinate 0
// followed by that edge. Coordinate 0 therefore advances most often, and
// at d=2 the visited vertices are exactly the reflected binary Gray code.

#include <cstdint>
#include <optional>
#include <vector>

namespace decoupling {

struct CycleSpec {
    std::uint32_t d = 2;  // modulus, >= 2
    std::uint32_t k = 1;  // coordinate count, >= 1
};

struct StepList {
    CycleSpec spec;
    std::vector<std::uint32_t> steps;  // d^k generator indices in [0, k)
};

struct HamiltonReport {
    bool pass = false;
    std::size_t visited = 0;
    // Failure details: the step index at which a vertex was revisited, or
    // (when the walk is injective) the bad endpoint / short walk.
    std::optional<std::size_t> repeat_step;
    std::optional<std::vector<std::uint32_t>> repeat_vertex;
    std::optional<std::vector<std::uint32_t>> endpoint;
};

// d^k must stay under this bound for construction and verification.
inline constexpr std::uint64_t kCycleCap = 1u << 24;

StepList hamilton_cycle(const CycleSpec& spec);

// Vertex walk from the all-zero vertex; d^k vertices, one per step taken.
std::vector<std::vector<std::uint32_t>> vertices(const StepList& sl);

// Exhaustive visit-once plus closure check.
HamiltonReport verify_hamilton(const StepList& sl);

}  // namespace decoupling
