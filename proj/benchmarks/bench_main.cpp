// Microbenchmarks for the numeric kernels that dominate runtime.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/flow.hpp"
#include "elastica/minimize.hpp"
#include "elastica/ode.hpp"
#include "elastica/quadrature.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> cos_profile(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = std::cos(2.0 * kPi * static_cast<double>(i) / static_cast<double>(n));
    return v;
}

void BM_MkdvRhs(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto kappa = cos_profile(n);
    for (auto _ : state) {
        auto r = elastica::mkdv_rhs(kappa, 2.0 * kPi);
        benchmark::DoNotOptimize(r.data());
    }
}
BENCHMARK(BM_MkdvRhs)->Arg(256)->Arg(1024);

void BM_EvolveSteps(benchmark::State& state) {
    elastica::FlowState st;
    st.L = 2.0 * kPi;
    st.kappa = cos_profile(256);
    const double dt = elastica::stable_dt(st.L, 256, 1);
    for (auto _ : state) {
        auto out = elastica::evolve(st, 1, dt, 128);
        benchmark::DoNotOptimize(out.kappa.data());
    }
}
BENCHMARK(BM_EvolveSteps);

void BM_ElasticaIntegrals(benchmark::State& state) {
    for (auto _ : state) {
        auto t = elastica::elastica_integrals({0.0, 0.0, 1.0, 1.0}, -1.0, 1.0, 1024);
        benchmark::DoNotOptimize(t.s.data());
    }
}
BENCHMARK(BM_ElasticaIntegrals);

void BM_SolveSmkdv(benchmark::State& state) {
    for (auto _ : state) {
        auto s = elastica::solve_smkdv({-1.0, 2.0, 0.0}, 10.0, 10000);
        benchmark::DoNotOptimize(s.profile.kappa.data());
    }
}
BENCHMARK(BM_SolveSmkdv);

void BM_MinimizeArch(benchmark::State& state) {
    const auto t = elastica::elastica_integrals({0.0, 0.0, 1.0, 1.0}, -1.0, 1.0, 256);
    elastica::BoundaryConditions bc;
    bc.start = {-1.0, 0.0};
    bc.end = {1.0, t.y.back()};
    bc.start_tangent = {true, kPi / 2.0};
    bc.end_tangent = {true, kPi / 2.0};
    bc.total_length = t.s.back();
    for (auto _ : state) {
        auto r = elastica::minimize_elastica(bc, 512);
        benchmark::DoNotOptimize(r.energy);
    }
}
BENCHMARK(BM_MinimizeArch);

void BM_Resample(benchmark::State& state) {
    std::vector<elastica::Vec2> pts(4097);
    for (std::size_t i = 0; i <= 4096; ++i) {
        const double t = 2.0 * kPi * i / 4096.0;
        pts[i] = {std::cos(t), std::sin(t)};
    }
    for (auto _ : state) {
        auto c = elastica::resample_arclength(pts, 2048);
        benchmark::DoNotOptimize(c.points.data());
    }
}
BENCHMARK(BM_Resample);

}  // namespace

BENCHMARK_MAIN();
