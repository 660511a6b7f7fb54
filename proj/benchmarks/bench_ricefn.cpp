#include <benchmark/benchmark.h>

#include "ricefn/ilhi.hpp"
#include "ricefn/oracles.hpp"
#include "ricefn/rice_ie.hpp"
#include "ricefn/special.hpp"

namespace {

void BM_LowerIncompleteGamma(benchmark::State& state) {
    const double a = static_cast<double>(state.range(0)) + 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(ricefn::lower_incomplete_gamma_log(a, 0.9 * a + 3.0));
}
BENCHMARK(BM_LowerIncompleteGamma)->Arg(1)->Arg(30)->Arg(1400);

void BM_BesselIScaled(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ricefn::bessel_i_scaled(0, x));
}
BENCHMARK(BM_BesselIScaled)->Arg(1)->Arg(20)->Arg(200);

void BM_IePoly(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ricefn::ie_poly({0.9, 10.0}, terms));
}
BENCHMARK(BM_IePoly)->Arg(20)->Arg(700);

void BM_IeSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ricefn::ie_series({0.9, 10.0}));
}
BENCHMARK(BM_IeSeries);

void BM_IeQuad(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ricefn::rice_ie_quad(0.9, 10.0));
}
BENCHMARK(BM_IeQuad);

void BM_IlhiPoly700(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ricefn::ilhi_poly({2.2, 1.0, 2.2, 5.0}, 700));
}
BENCHMARK(BM_IlhiPoly700);

void BM_IlhiClosedHalf(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ricefn::ilhi_closed_half({3.0, 3.5, 1.8, 4.0}));
}
BENCHMARK(BM_IlhiClosedHalf);

void BM_IlhiQuad(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ricefn::ilhi_quad(2.2, 1.0, 2.2, 5.0));
}
BENCHMARK(BM_IlhiQuad);

}  // namespace

BENCHMARK_MAIN();
