#include <benchmark/benchmark.h>

#include "fracsis/feedback.hpp"
#include "fracsis/hjb.hpp"
#include "fracsis/stationary.hpp"

namespace {

const fracsis::ModelParams kParams =
    fracsis::validate_params({0.5, 1.5, 1.0, 2.25, 1.0});

void BM_Drift(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fracsis::drift(kParams, x));
        x = x < 4.0 ? x + 1e-3 : 0.0;
    }
}
BENCHMARK(BM_Drift);

void BM_MarchStep(benchmark::State& state) {
    // n_t scales with n_x to keep dt/dx (and so the CFL ratio) fixed
    const auto n_x = static_cast<int>(state.range(0));
    const auto grid = fracsis::build_grid(4.0, 5.0, n_x, 20 * n_x);
    auto field = fracsis::make_value_field(kParams, grid, fracsis::ExitCostSpec::bump());
    for (auto _ : state) {
        fracsis::step(field);
        if (field.step_index == grid.n_t) {
            state.PauseTiming();
            field = fracsis::make_value_field(kParams, grid,
                                              fracsis::ExitCostSpec::bump());
            state.ResumeTiming();
        }
    }
    state.SetItemsProcessed(state.iterations() * (grid.n_x + 1));
}
BENCHMARK(BM_MarchStep)->Arg(200)->Arg(1600);

void BM_FullMarch(benchmark::State& state) {
    const auto grid = fracsis::build_grid(4.0, 5.0, 200, 4000);
    for (auto _ : state) {
        auto sol = fracsis::solve(kParams, grid, fracsis::ExitCostSpec::linear(), {});
        benchmark::DoNotOptimize(sol.field.values.data());
    }
}
BENCHMARK(BM_FullMarch)->Unit(benchmark::kMillisecond);

void BM_StationaryProfile(benchmark::State& state) {
    const auto nodes = fracsis::build_grid(10.0, 1.0, 1600, 1).nodes();
    for (auto _ : state) {
        auto field = fracsis::stationary_value(kParams, 0.0, nodes);
        benchmark::DoNotOptimize(field.values.data());
    }
}
BENCHMARK(BM_StationaryProfile);

void BM_KernelDerivative(benchmark::State& state) {
    const auto traj = fracsis::integrate_uncontrolled(kParams, 0.5, 5.0, 1e-3);
    for (auto _ : state) {
        auto d = fracsis::cf_derivative(traj.states, 1e-3, 0.5, 1.0);
        benchmark::DoNotOptimize(d.data());
    }
}
BENCHMARK(BM_KernelDerivative);

void BM_FeedbackTrajectory(benchmark::State& state) {
    const auto grid = fracsis::build_grid(4.0, 5.0, 200, 4000);
    fracsis::SolveOptions opts;
    opts.keep_history = true;
    const auto sol = fracsis::solve(kParams, grid, fracsis::ExitCostSpec::linear(), opts);
    for (auto _ : state) {
        auto traj = fracsis::euler_trajectory(kParams, sol, 1.25);
        benchmark::DoNotOptimize(traj.states.data());
    }
}
BENCHMARK(BM_FeedbackTrajectory)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
