#include <benchmark/benchmark.h>

#include "szego/discrete_norms.hpp"
#include "szego/frame_analysis.hpp"
#include "szego/random.hpp"
#include "szego/synthesis.hpp"

namespace {

using namespace szego;

void BM_RootValues(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    TestRandom rng(1);
    const auto f = rng.polynomial(k - 1);
    for (auto _ : state) benchmark::DoNotOptimize(root_values(f, k));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RootValues)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_DiscreteNorm(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    TestRandom rng(2);
    const auto f = rng.polynomial(512);
    for (auto _ : state) benchmark::DoNotOptimize(discrete_norm(f, k));
}
BENCHMARK(BM_DiscreteNorm)->Arg(64)->Arg(1024);

void BM_SupDilatedNorm(benchmark::State& state) {
    TestRandom rng(3);
    const auto f = rng.polynomial(16);
    const auto rings = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sup_dilated_norm(f, rings));
}
BENCHMARK(BM_SupDilatedNorm)->Arg(1600);

void BM_AnalysisMap(benchmark::State& state) {
    const Grid grid = build_grid(static_cast<std::size_t>(state.range(0)));
    TestRandom rng(4);
    const auto g = rng.polynomial(16);
    for (auto _ : state) benchmark::DoNotOptimize(analysis_map(g, grid));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * grid.size()));
}
BENCHMARK(BM_AnalysisMap)->Arg(64)->Arg(256);

void BM_Solve(benchmark::State& state) {
    TestRandom rng(5);
    const SynthesisProblem problem(rng.polynomial(8), 32, 128);
    for (auto _ : state) benchmark::DoNotOptimize(solve(problem));
}
BENCHMARK(BM_Solve)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
