#include <benchmark/benchmark.h>

#include "eoslab/catalog.hpp"
#include "eoslab/convex.hpp"
#include "eoslab/fourier.hpp"
#include "eoslab/norms.hpp"
#include "eoslab/psi.hpp"

using namespace eoslab;

static void BM_LegendreTransform(benchmark::State& state) {
    YoungFunction w{[](double z) { return std::exp(z); },
                    [](double z) { return std::exp(z); }, 2.0};
    LegendreTransform star(w);
    double p = 2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(star(p));
        p = p < 1e6 ? p * 1.01 : 2.0;
    }
}
BENCHMARK(BM_LegendreTransform);

static void BM_OrliczNorm(benchmark::State& state) {
    SpaceSpec s = SpaceSpec::torus(std::size_t(state.range(0)), true);
    GridFunction f = g_m(s, 1.0);
    NFunction n = n_mr(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(orlicz(f, n).value);
}
BENCHMARK(BM_OrliczNorm)->Arg(1 << 12)->Arg(1 << 14)->Arg(1 << 16);

static void BM_GrandNorm(benchmark::State& state) {
    SpaceSpec s = SpaceSpec::torus(std::size_t(state.range(0)), true);
    GridFunction f = g_m(s, 1.0);
    PsiFunction psi = psi_power(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(g_psi(f, 2.0, psi).value);
}
BENCHMARK(BM_GrandNorm)->Arg(1 << 12)->Arg(1 << 14)->Arg(1 << 16);

static void BM_PartialSumSweep(benchmark::State& state) {
    SpaceSpec s = SpaceSpec::torus(1 << 14, false);
    GridFunction f = g_m(s, 1.0);
    FourierCoeffs fc = coeffs(f, int(state.range(0)));
    std::vector<int> ms;
    for (int m = 2; m <= fc.m_max; m *= 2) ms.push_back(m);
    for (auto _ : state)
        benchmark::DoNotOptimize(partial_sum_snapshots(fc, s, ms).size());
}
BENCHMARK(BM_PartialSumSweep)->Arg(256)->Arg(4096);
