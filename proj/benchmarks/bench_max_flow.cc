// Solver throughput on energy graphs derived from synthetic workloads of
// growing size, with and without pairwise coupling.

#include <benchmark/benchmark.h>

#include "botcut/detection.hpp"
#include "botcut/energy_graph.hpp"
#include "botcut/synth.hpp"

namespace {

using namespace botcut;

SynthOutput workload(std::size_t n) {
    SynthConfig cfg;
    cfg.n_accounts = n;
    cfg.seed = 7;
    return generate(cfg);
}

EnergyParams params_with_delta(double delta) {
    return EnergyParams::with_derived_epsilon(1.0, 0.75, 0.65, delta, 10.0, 10.0);
}

void BM_GlobalCut(benchmark::State& state) {
    const auto synth = workload(static_cast<std::size_t>(state.range(0)));
    const auto eg = build_energy_graph(synth.graph, params_with_delta(0.0));
    for (auto _ : state) {
        auto cut = solve_min_cut(eg);
        benchmark::DoNotOptimize(cut.min_cut_value);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(synth.graph.edge_count()));
}
BENCHMARK(BM_GlobalCut)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_GlobalCutCoupled(benchmark::State& state) {
    const auto synth = workload(static_cast<std::size_t>(state.range(0)));
    const auto eg = build_energy_graph(synth.graph, params_with_delta(0.1));
    for (auto _ : state) {
        auto cut = solve_min_cut(eg);
        benchmark::DoNotOptimize(cut.min_cut_value);
    }
}
BENCHMARK(BM_GlobalCutCoupled)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_BuildEnergyGraph(benchmark::State& state) {
    const auto synth = workload(static_cast<std::size_t>(state.range(0)));
    const auto params = params_with_delta(0.0);
    for (auto _ : state) {
        auto eg = build_energy_graph(synth.graph, params);
        benchmark::DoNotOptimize(eg.account_count);
    }
}
BENCHMARK(BM_BuildEnergyGraph)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
