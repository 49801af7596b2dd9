#include <benchmark/benchmark.h>

#include "dualrail/jch.hpp"

using namespace dualrail;

static void BM_BuildJch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double hop = 0.01;
    const JchParams params = JchParams::resonant(1.0, hop, 2);
    const CouplingGraph chain = build_chain(n, hop);
    const FockAtomBasis basis = enumerate_basis(n, 2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_jch(params, chain, basis));
    }
}
BENCHMARK(BM_BuildJch)->Arg(2)->Arg(3);

static void BM_CalibrateJeff(benchmark::State& state) {
    const JchParams params = JchParams::resonant(1.0, 0.01, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(calibrate_j_eff(params));
    }
}
BENCHMARK(BM_CalibrateJeff);

static void BM_Leakage(benchmark::State& state) {
    const double hop = 0.01;
    const JchParams params = JchParams::resonant(1.0, hop, 1);
    const CouplingGraph chain = build_chain(static_cast<int>(state.range(0)), hop);
    for (auto _ : state) {
        benchmark::DoNotOptimize(interconversion_leakage(params, chain, 10.0 / hop));
    }
}
BENCHMARK(BM_Leakage)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
