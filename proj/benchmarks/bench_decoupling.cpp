#include <benchmark/benchmark.h>

#include "decoupling/codes.hpp"
#include "decoupling/cycles.hpp"
#include "decoupling/designs.hpp"
#include "decoupling/schedule.hpp"
#include "decoupling/verifier.hpp"

using namespace decoupling;

static void BM_hamilton_cycle(benchmark::State& state) {
    const CycleSpec spec{static_cast<std::uint32_t>(state.range(0)),
                         static_cast<std::uint32_t>(state.range(1))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hamilton_cycle(spec));
    }
}
BENCHMARK(BM_hamilton_cycle)->Args({2, 16})->Args({6, 4})->Args({2, 20});

static void BM_min_distance_enumeration(benchmark::State& state) {
    const LinearCode code = simplex_code(4, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distance(code));
    }
}
BENCHMARK(BM_min_distance_enumeration)->Arg(2)->Arg(3)->Arg(4);

static void BM_min_distance_support_search(benchmark::State& state) {
    const LinearCode code = hamming_code(4, 3);  // 4^18 codewords, support path
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distance(code));
    }
}
BENCHMARK(BM_min_distance_support_search);

static void BM_verify_strength(benchmark::State& state) {
    const OrthogonalArray array = oa_from_code(simplex_code(4, static_cast<unsigned>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_strength(array, 2));
    }
}
BENCHMARK(BM_verify_strength)->Arg(3)->Arg(4);

static void BM_compile_qubit_network(benchmark::State& state) {
    const auto n0 = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile_qubit_network(n0));
    }
}
BENCHMARK(BM_compile_qubit_network)->Arg(5)->Arg(21)->Arg(85);

static void BM_compile_qudit_network(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile_qudit_network(17, 2));
    }
}
BENCHMARK(BM_compile_qudit_network);

static void BM_average_hamiltonian(benchmark::State& state) {
    const PulseSchedule s = compile_qubit_network(static_cast<std::size_t>(state.range(0)));
    const PairHamiltonian h = random_pair_hamiltonian(s.spec, 1, s.block);
    for (auto _ : state) {
        benchmark::DoNotOptimize(average_hamiltonian(s, h));
    }
}
BENCHMARK(BM_average_hamiltonian)->Arg(3)->Arg(5);

static void BM_pairwise_verify(benchmark::State& state) {
    const PulseSchedule s = compile_qubit_network(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pairwise_verify(s));
    }
}
BENCHMARK(BM_pairwise_verify)->Arg(21)->Arg(85);

static void BM_sequence_equivalence(benchmark::State& state) {
    const PulseSchedule s = compile_qubit_network(5);
    const PairHamiltonian h = random_pair_hamiltonian(s.spec, 1);
    const SequenceTimes times = SequenceTimes::uniform(s.num_steps);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sequence_equivalence(s, h, times));
    }
}
BENCHMARK(BM_sequence_equivalence);

BENCHMARK_MAIN();
