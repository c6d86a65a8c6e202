#include <benchmark/benchmark.h>

#include <vector>

#include "nmcontrol/control_optimizer.hpp"

namespace {

void BM_ControlledAverageCoherence(benchmark::State& state) {
    const nmc::SpectralParams p(4.0);
    const auto steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nmc::controlled_average_coherence(p, 30.0, steps));
}
BENCHMARK(BM_ControlledAverageCoherence)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State& state) {
    const std::vector<double> grid{2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0};
    for (auto _ : state) benchmark::DoNotOptimize(nmc::sweep(grid));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

void BM_GridSearch(benchmark::State& state) {
    const nmc::SpectralParams p(4.0);
    const auto resolution = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nmc::grid_search_verify(p, 30.0, resolution));
}
BENCHMARK(BM_GridSearch)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
