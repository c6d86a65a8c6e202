#include <benchmark/benchmark.h>

#include "nmcontrol/dephasing_maps.hpp"
#include "nmcontrol/spectral_kernels.hpp"

namespace {

void BM_DecoherenceFn(benchmark::State& state) {
    const nmc::SpectralParams p(3.5);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nmc::decoherence_fn(t, p));
        t += 1e-3;
    }
}
BENCHMARK(BM_DecoherenceFn);

void BM_SampleKernels(benchmark::State& state) {
    const nmc::SpectralParams p(4.0);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nmc::sample_kernels(t, p));
        t += 1e-3;
    }
}
BENCHMARK(BM_SampleKernels);

void BM_MicroscopicPropagation(benchmark::State& state) {
    const nmc::SpectralParams p(4.0);
    const auto protocol = nmc::ControlProtocol::single(1.0, nmc::Axis::y, 0.7);
    const auto r0 = nmc::BlochVector::from_angles(0.6);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nmc::propagate_microscopic(r0, protocol, t, p));
        t += 1e-3;
    }
}
BENCHMARK(BM_MicroscopicPropagation);

void BM_CpAudit(benchmark::State& state) {
    const nmc::SpectralParams p(4.0);
    const auto protocol = nmc::ControlProtocol::single(1.0, nmc::Axis::y, 0.9);
    const auto steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nmc::cp_audit(protocol, p, 30.0, steps));
}
BENCHMARK(BM_CpAudit)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
