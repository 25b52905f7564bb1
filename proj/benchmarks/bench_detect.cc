// End-to-end detection cost: MAP label only versus full per-node marginals
// at different worker counts.

#include <benchmark/benchmark.h>

#include "botcut/detection.hpp"
#include "botcut/synth.hpp"

namespace {

using namespace botcut;

const SynthOutput& workload() {
    static const SynthOutput synth = [] {
        SynthConfig cfg;
        cfg.n_accounts = 2000;
        cfg.seed = 7;
        return generate(cfg);
    }();
    return synth;
}

EnergyParams desk_params() {
    return EnergyParams::with_derived_epsilon(1.0, 0.8, 0.6, 0.0, 10.0, 10.0);
}

void BM_DetectMapOnly(benchmark::State& state) {
    const auto& synth = workload();
    for (auto _ : state) {
        auto r = detect(synth.graph, desk_params(), {}, {.marginals = false});
        benchmark::DoNotOptimize(r.min_cut_value);
    }
}
BENCHMARK(BM_DetectMapOnly)->Unit(benchmark::kMillisecond);

void BM_DetectWithMarginals(benchmark::State& state) {
    const auto& synth = workload();
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto r = detect(synth.graph, desk_params(), {},
                        {.marginals = true, .workers = workers});
        benchmark::DoNotOptimize(r.p_bot.data());
    }
}
BENCHMARK(BM_DetectWithMarginals)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
