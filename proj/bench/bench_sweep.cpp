// Serial reference vs OpenMP sweeps. Thread count follows BUOYANCY_THREADS.

#include <benchmark/benchmark.h>

#include "buoyancy/analysis.hpp"

using namespace buoyancy;

namespace {

Execution mode(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_Table(benchmark::State& state) {
    const auto& cal = frozen_calibration();
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        for (auto family : {ProfileFamily::Linear, ProfileFamily::Quadratic, ProfileFamily::Mixed}) {
            benchmark::DoNotOptimize(reproduce_table(family, n, cal, mode(state)));
        }
    }
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Table)->ArgsProduct({{0, 1}, {4, 16}})->Unit(benchmark::kMillisecond);

void BM_Curve(benchmark::State& state) {
    const SolverConfig config{state.range(1) == 0 ? Method::Chebyshev : Method::FiniteDifference, 16};
    const auto profile = bundled_profile(ProfileFamily::Mixed, 0.5);
    const auto grid = uniform_grid(1.0, 20.0, 64);
    for (auto _ : state) benchmark::DoNotOptimize(neutral_curve(config, profile, grid, mode(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Curve)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
