#include "decoupling/cycles.hpp"

#include <stdexcept>

namespace decoupling {

namespace {

std::uint64_t checked_size(const CycleSpec& spec) {
    if (spec.d < 2) throw std::invalid_argument("cycle modulus d must be >= 2");
    if (spec.k < 1) throw std::invalid_argument("cycle needs at least one coordinate");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < spec.k; ++i) {
        size *= spec.d;
        if (size > kCycleCap) throw std::length_error("cycle enumeration cap exceeded");
    }
    return size;
}

}  // namespace

StepList hamilton_cycle(const CycleSpec& spec) {
    checked_size(spec);
    std::vector<std::uint32_t> steps(spec.d, 0);  // k = 1 base: d steps of generator 0
    for (std::uint32_t kk = 2; kk <= spec.k; ++kk) {
        std::vector<std::uint32_t> next;
        next.reserve(steps.size() * spec.d);
        for (std::uint32_t inner : steps) {
            for (std::uint32_t r = 0; r + 1 < spec.d; ++r) next.push_back(0);
            next.push_back(inner + 1);  // previous coordinates shift up by one
        }
        steps = std::move(next);
    }
    return {spec, std::move(steps)};
}

std::vector<std::vector<std::uint32_t>> vertices(const StepList& sl) {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(sl.steps.size());
    std::vector<std::uint32_t> v(sl.spec.k, 0);
    for (std::uint32_t g : sl.steps) {
        out.push_back(v);
        if (g >= sl.spec.k) throw std::invalid_argument("step uses an out-of-range generator");
        v[g] = (v[g] + 1) % sl.spec.d;
    }
    return out;
}

HamiltonReport verify_hamilton(const StepList& sl) {
    const std::uint64_t size = checked_size(sl.spec);
    HamiltonReport report;
    std::vector<bool> seen(size, false);
    std::vector<std::uint32_t> v(sl.spec.k, 0);
    std::uint64_t packed = 0;  // sum v_i * d^i
    std::vector<std::uint64_t> weight(sl.spec.k, 1);
    for (std::uint32_t i = 1; i < sl.spec.k; ++i) weight[i] = weight[i - 1] * sl.spec.d;

    for (std::size_t step = 0; step < sl.steps.size(); ++step) {
        if (seen[packed]) {
            report.repeat_step = step;
            report.repeat_vertex = v;
            return report;
        }
        seen[packed] = true;
        ++report.visited;
        const std::uint32_t g = sl.steps[step];
        if (g >= sl.spec.k) throw std::invalid_argument("step uses an out-of-range generator");
        const std::uint32_t old = v[g];
        v[g] = (old + 1) % sl.spec.d;
        packed -= weight[g] * old;
        packed += weight[g] * v[g];
    }
    if (report.visited != size || packed != 0) {
        report.endpoint = v;
        return report;
    }
    report.pass = true;
    return report;
}

}  // namespace decoupling
