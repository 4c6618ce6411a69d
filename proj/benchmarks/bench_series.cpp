#include <benchmark/benchmark.h>

#include "oscbath/dyson.hpp"
#include "oscbath/fock_oracle.hpp"

using namespace oscbath;

namespace {

ModelParams bench_params() {
    ModelParams p;
    p.theta = 1.0;
    p.beta = 1.0;
    p.lambda = 0.3;
    p.form_factor = FormFactor::power_law(1.0, 0.0, 1.0);
    return p;
}

}  // namespace

static void BM_CycleIntegralTrace(benchmark::State& state) {
    const KernelEval ker(bench_params());
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        // bypass the evaluator cache: measure the discretized trace itself
        benchmark::DoNotOptimize(cycle_integral(
            m, [&](double t) { return ker.k_osc(t); }, [&](double t) { return ker.k_f_fast(t); },
            64));
    }
}
BENCHMARK(BM_CycleIntegralTrace)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_H2nDirect(benchmark::State& state) {
    const DysonEvaluator ev(bench_params());
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.h2n_direct(n, {seed++, 20000}));
    }
    state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_H2nDirect)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_FreeChain(benchmark::State& state) {
    const std::vector<double> times = {0.1, 0.35, 0.6, 0.85};
    const int levels = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(free_chain_expectation(0.7, 0.4, levels, 1.0, times));
    }
}
BENCHMARK(BM_FreeChain)->Arg(24)->Arg(96);

static void BM_OracleCoefficient(benchmark::State& state) {
    auto params = bench_params();
    const auto modes = mode_discretization(params.form_factor, 16);
    params.form_factor = FormFactor::discrete_modes(modes);
    const TruncationSpec spec{32, modes, 72};
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(h2n_oracle(2, params, spec, {seed++, 2000}));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_OracleCoefficient)->Unit(benchmark::kMillisecond);
