#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "mcs/erroranalysis.hpp"
#include "mcs/stencil.hpp"
#include "mcs/timestepper.hpp"

namespace {

void bm_mcs_step(benchmark::State& state) {
    const int inv_h = static_cast<int>(state.range(0));
    const mcs::ModelParams mp(-0.7, 2.0, 3.0);
    const mcs::Grid2D grid =
        mcs::build_grid(-10.0, 10.0, -10.0, 10.0, 1.0 / inv_h, 1.0);
    const mcs::StencilOperators ops =
        mcs::StencilOperators::model_problem(grid, mp);
    const mcs::SchemeParams sp =
        mcs::make_scheme(1.0 / 3.0, 0.4, 1.0 / inv_h, 0, mp.rho);
    mcs::Stepper stepper(ops, sp);
    mcs::GridField u = mcs::dirac_initial(grid);
    for (auto _ : state) {
        u = stepper.mcs_step(u);
        benchmark::DoNotOptimize(u.values.data());
    }
    state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(bm_mcs_step)->Arg(16)->Arg(32)->Arg(64);

void bm_tridiagonal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(0.1, 1.0);
    std::vector<double> sub(n - 1), diag(n), sup(n - 1), rhs(n);
    for (int i = 0; i < n; ++i) {
        diag[i] = 4.0 + dist(rng);
        rhs[i] = dist(rng);
    }
    for (int i = 0; i + 1 < n; ++i) {
        sub[i] = -dist(rng);
        sup[i] = -dist(rng);
    }
    for (auto _ : state) {
        auto x = mcs::tridiagonal_solve(sub, diag, sup, rhs);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bm_tridiagonal)->Arg(256)->Arg(1024)->Arg(4096);

void bm_quadrature_c_high(benchmark::State& state) {
    const mcs::ModelParams mp(-0.7, 2.0, 3.0);
    const mcs::SchemeParams sp =
        mcs::make_scheme(1.0 / 3.0, 0.4, 1.0 / 16, 2, mp.rho);
    const mcs::ErrorAnalysis ea(mp, sp, 1.0);
    for (auto _ : state) {
        double v = ea.c_high(0, 0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_quadrature_c_high);

} // namespace

BENCHMARK_MAIN();
