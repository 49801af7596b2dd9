#include <benchmark/benchmark.h>

#include "dualrail/evolution.hpp"
#include "dualrail/spectral.hpp"

using namespace dualrail;

static void BM_SpectralDecompose(benchmark::State& state) {
    const CouplingGraph chain = build_chain(static_cast<int>(state.range(0)), 1.0);
    for (auto _ : state) {
        SpectralDecomposition d(chain);
        benchmark::DoNotOptimize(d.eigenvalues());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectralDecompose)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_Evolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CouplingGraph chain = build_chain(n, 1.0);
    const SpectralDecomposition d(chain);
    SingleExcitationState psi = SingleExcitationState::basis_state(n, 1);
    for (auto _ : state) {
        psi = evolve(psi, d, 0.37);
        benchmark::DoNotOptimize(psi.vector());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Evolve)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_TransitionAmplitude(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SpectralDecomposition d(build_chain(n, 1.0));
    double t = 0.0;
    for (auto _ : state) {
        t += 0.1;
        benchmark::DoNotOptimize(d.transition_amplitude(1, n, t));
    }
}
BENCHMARK(BM_TransitionAmplitude)->Arg(16)->Arg(64);

static void BM_NonHermitianStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CouplingGraph chain = build_chain(n, 1.0);
    const DecayProfile detect = DecayProfile::single_site(n, n, 1.0);
    const SingleExcitationState psi = SingleExcitationState::basis_state(n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_nonhermitian(psi, chain, detect, 1.0, 0.1));
    }
}
BENCHMARK(BM_NonHermitianStep)->Arg(8)->Arg(32);
