#include <benchmark/benchmark.h>

#include "oscbath/pairings.hpp"

using namespace oscbath;

static void BM_EnumeratePairings(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    long long touched = 0;
    for (auto _ : state) {
        for_each_pairing(m, [&](const Pairing& p) { touched += p.pairs.back().second; });
    }
    benchmark::DoNotOptimize(touched);
    state.SetItemsProcessed(state.iterations() *
                            static_cast<long long>(pairing_count(m).convert_to<double>()));
}
BENCHMARK(BM_EnumeratePairings)->Arg(4)->Arg(6)->Arg(8);

static void BM_PairingUnrank(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const BigInt count = pairing_count(m);
    BigInt idx = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pairing_at(m, idx));
        idx = (idx + 9973) % count;
    }
}
BENCHMARK(BM_PairingUnrank)->Arg(6)->Arg(10);

static void BM_ConnectedComponents(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto ps = all_pairings(m);
    std::size_t i = 0, j = ps.size() / 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(connected_components(PairGraph{ps[i], ps[j]}));
        i = (i + 1) % ps.size();
        j = (j + 3) % ps.size();
    }
}
BENCHMARK(BM_ConnectedComponents)->Arg(4)->Arg(6);

static void BM_LinkedClusterCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(linked_cluster_pair_count(n));
}
BENCHMARK(BM_LinkedClusterCount)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
