#include <benchmark/benchmark.h>

#include "kerr/closed_form.hpp"
#include "kerr/evolution.hpp"
#include "kerr/revival.hpp"

namespace {

kerr::SimParams params(unsigned m) {
    kerr::SimParams p{.chi = 5.0, .x0 = 1.0, .p0 = 1.0, .m = m};
    p.t_end = 2 * p.revival_period();
    return p;
}

void BM_Laguerre(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    const kerr::Complex z{-0.3, 0.8};
    for (auto _ : state) benchmark::DoNotOptimize(kerr::laguerre_assoc1(m, z));
}
BENCHMARK(BM_Laguerre)->Arg(1)->Arg(10)->Arg(100);

void BM_PhotonAddedState(benchmark::State& state) {
    const kerr::SimParams p = params(static_cast<unsigned>(state.range(0)));
    const std::size_t n_max = p.resolved_n_max();
    for (auto _ : state) benchmark::DoNotOptimize(kerr::photon_added_state(p.x0, p.p0, p.m, n_max));
}
BENCHMARK(BM_PhotonAddedState)->Arg(0)->Arg(10);

void BM_ObservablesAt(benchmark::State& state) {
    const kerr::SimParams p = params(static_cast<unsigned>(state.range(0)));
    const kerr::StateVector s = kerr::photon_added_state(p.x0, p.p0, p.m, p.resolved_n_max());
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kerr::observables_at(s, p.chi, t));
        t += 1e-3;
    }
}
BENCHMARK(BM_ObservablesAt)->Arg(0)->Arg(10);

void BM_RunSeries(benchmark::State& state) {
    const kerr::SimParams p = params(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kerr::run_series(p));
}
BENCHMARK(BM_RunSeries)->Arg(0)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_AnalyticSeries(benchmark::State& state) {
    const kerr::SimParams p = params(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kerr::run_analytic_series(p));
}
BENCHMARK(BM_AnalyticSeries)->Arg(0)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_AnalyzeRevivals(benchmark::State& state) {
    const kerr::TimeSeries ts = kerr::run_series(params(2));
    for (auto _ : state) benchmark::DoNotOptimize(kerr::analyze_revivals(ts));
}
BENCHMARK(BM_AnalyzeRevivals)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
