#include <benchmark/benchmark.h>

#include "oscbath/kernels.hpp"

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

static void BM_KernelEvalConstruction(benchmark::State& state) {
    const auto p = bench_params();
    for (auto _ : state) benchmark::DoNotOptimize(KernelEval(p));
}
BENCHMARK(BM_KernelEvalConstruction);

static void BM_KfDirect(benchmark::State& state) {
    const KernelEval ker(bench_params());
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ker.k_f(t));
        t += 0.001;
        if (t > 1.0) t = 0.0;
    }
}
BENCHMARK(BM_KfDirect);

static void BM_KfInterpolated(benchmark::State& state) {
    const KernelEval ker(bench_params());
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ker.k_f_fast(t));
        t += 0.001;
        if (t > 1.0) t = 0.0;
    }
}
BENCHMARK(BM_KfInterpolated);
