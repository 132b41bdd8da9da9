#include <benchmark/benchmark.h>

#include "tcphonon/mc_oracle.hpp"
#include "tcphonon/scan.hpp"

using namespace tcphonon;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "openmp"); }

void BM_fig1_scan(benchmark::State& state)
{
    const auto grid = linspace(0.05, 0.99, 200);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_lambda_rate(1.0, 1.0, grid, {}, mode(state)));
    }
    label(state);
}

void BM_fig2_scan(benchmark::State& state)
{
    const auto k_grid = linspace(0.02, 2.0, 40);
    const std::vector<double> cs{0.35, 0.5, 0.65, 0.8, 0.95};
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_g_rate(1.0, 1.0, cs, k_grid, {}, mode(state)));
    }
    label(state);
}

void BM_spectrum_scan(benchmark::State& state)
{
    const ModelParams m = params_from_physical({1.0, 0.5, 1.0});
    const auto grid = logspace(1e-3, 1e3, 20000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_spectrum(m, grid, mode(state)));
    }
    label(state);
}

void BM_mc_g_to_2g(benchmark::State& state)
{
    McOptions o;
    o.samples = 1u << 20;
    o.execution = mode(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_rate_oracle({1.0, 0.5, 1.0}, {Process::g_to_2g, 1.0}, o));
    }
    label(state);
}

}  // namespace

BENCHMARK(BM_fig1_scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fig2_scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectrum_scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mc_g_to_2g)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
