#include <benchmark/benchmark.h>

#include "dualrail/analysis.hpp"
#include "dualrail/protocol.hpp"

using namespace dualrail;

static void BM_RunProtocolRegular(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CouplingGraph chain = build_chain(n, 1.0);
    const PolaritonQubit qubit(1.0, 0.0);
    const MeasurementSchedule schedule{default_regular_schedule(chain, 2000)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_protocol(chain, qubit, schedule, 0.99));
    }
}
BENCHMARK(BM_RunProtocolRegular)->Arg(8)->Arg(32)->Arg(64);

static void BM_OptimizeSchedule(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CouplingGraph chain = build_chain(n, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_schedule(chain, 32, 0.75 * n, 0.75 * n / 200.0));
    }
}
BENCHMARK(BM_OptimizeSchedule)->Arg(8)->Arg(32)->Arg(64);

static void BM_DarkWeight(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CouplingGraph chain = build_chain(n, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dark_weight(chain, 1, n));
    }
}
BENCHMARK(BM_DarkWeight)->Arg(16)->Arg(64);

static void BM_RunContinuous(benchmark::State& state) {
    const CouplingGraph chain = build_chain(static_cast<int>(state.range(0)), 1.0);
    const PolaritonQubit qubit(1.0, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_continuous(chain, qubit, 1.0, 20.0, 0.05));
    }
}
BENCHMARK(BM_RunContinuous)->Arg(4)->Arg(16);
