// Serial brute-force references against the pruned OpenMP enumerators.
// Both sides produce the same catalog; the benchmark also checks this once per case.

#include "frieze/mesh.hpp"
#include "frieze/slk.hpp"
#include "frieze/twofrieze.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <stdexcept>

namespace {

int workers(const benchmark::State& state) { return static_cast<int>(state.range(1)); }

void BM_Sl3Reference(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(frieze::enumerate_sl3_reference(2, state.range(0)));
}

void BM_Sl3Parallel(benchmark::State& state) {
    if (frieze::enumerate_sl3(2, state.range(0), workers(state)) != frieze::enumerate_sl3_reference(2, state.range(0)))
        throw std::logic_error("sl3 catalogs differ");
    for (auto _ : state) benchmark::DoNotOptimize(frieze::enumerate_sl3(2, state.range(0), workers(state)));
}

void BM_MeshReference(benchmark::State& state) {
    const auto& q = frieze::quiver("E6");
    for (auto _ : state) benchmark::DoNotOptimize(frieze::enumerate_reference(q, state.range(0)));
}

void BM_MeshParallel(benchmark::State& state) {
    const auto& q = frieze::quiver("E6");
    if (frieze::enumerate(q, state.range(0), workers(state)) != frieze::enumerate_reference(q, state.range(0)))
        throw std::logic_error("mesh catalogs differ");
    for (auto _ : state) benchmark::DoNotOptimize(frieze::enumerate(q, state.range(0), workers(state)));
}

void BM_TwoFriezeReference(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(frieze::enumerate_reference(3, state.range(0)));
}

void BM_TwoFriezeParallel(benchmark::State& state) {
    if (frieze::enumerate(3, state.range(0), workers(state)) != frieze::enumerate_reference(3, state.range(0)))
        throw std::logic_error("2-frieze catalogs differ");
    for (auto _ : state) benchmark::DoNotOptimize(frieze::enumerate(3, state.range(0), workers(state)));
}

void worker_args(benchmark::internal::Benchmark* b, long long B) {
    for (int w = 1; w <= omp_get_num_procs(); w *= 2) b->Args({B, w});
}

}  // namespace

BENCHMARK(BM_Sl3Reference)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sl3Parallel)->Apply([](auto* b) { worker_args(b, 6); })->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeshReference)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeshParallel)->Apply([](auto* b) { worker_args(b, 4); })->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwoFriezeReference)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwoFriezeParallel)->Apply([](auto* b) { worker_args(b, 5); })->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
