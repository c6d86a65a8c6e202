#include <benchmark/benchmark.h>

#include "nmcontrol/env_oracle.hpp"

namespace {

void BM_OracleDecoherence(benchmark::State& state) {
    const auto env = nmc::build_env(nmc::SpectralParams(3.0), static_cast<std::size_t>(state.range(0)), 50.0);
    for (auto _ : state) benchmark::DoNotOptimize(nmc::oracle_decoherence(env, 2.5));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleDecoherence)->Arg(250)->Arg(1000)->Arg(4000)->Arg(16000)->Complexity(benchmark::oN);

void BM_OracleBlochVector(benchmark::State& state) {
    const auto env = nmc::build_env(nmc::SpectralParams(4.0));
    const auto r0 = nmc::BlochVector::from_angles(0.8);
    for (auto _ : state) benchmark::DoNotOptimize(nmc::oracle_bloch_vector(r0, 1.2, 3.0, 1.0, env));
}
BENCHMARK(BM_OracleBlochVector);

}  // namespace
