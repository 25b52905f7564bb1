#include "botcut/detection.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "botcut/max_flow.hpp"

namespace botcut {

namespace {

// Flow-network layout: accounts 0..n-1, source = n, sink = n+1. Terminal
// arcs are inserted first (two pairs per node), so the clamping arcs of node
// i are at fixed ids.
struct EnergyFlow {
    FlowGraph graph;
    std::uint32_t source;
    std::uint32_t sink;

    static std::uint32_t source_arc(std::uint32_t node) { return 4 * node; }
    static std::uint32_t sink_arc(std::uint32_t node) { return 4 * node + 2; }
};

EnergyFlow build_flow(const EnergyGraph& eg) {
    const auto n = static_cast<std::uint32_t>(eg.account_count);
    EnergyFlow ef{FlowGraph(n + 2), n, n + 1};
    for (std::uint32_t i = 0; i < n; ++i) {
        ef.graph.add_arc(ef.source, i, eg.source_capacity[i]);
        ef.graph.add_arc(i, ef.sink, eg.sink_capacity[i]);
    }
    for (const auto& p : eg.pair_capacities) ef.graph.add_undirected_arc(p.a, p.b, p.capacity);
    ef.graph.finalize();
    return ef;
}

// Clamping capacity: strictly larger than any finite cut, so the clamped
// terminal arc is never part of a minimum cut.
double clamp_capacity(const EnergyGraph& eg) { return eg.total_capacity() + 1.0; }

}  // namespace

CutResult solve_min_cut(const EnergyGraph& eg) {
    EnergyFlow ef = build_flow(eg);
    FlowSolver solver(ef.graph);
    CutResult result;
    result.max_flow_value = solver.solve(ef.source, ef.sink);
    result.min_cut_value = solver.cut_value();
    result.labels.resize(eg.account_count);
    for (std::uint32_t i = 0; i < eg.account_count; ++i)
        result.labels[i] = solver.on_source_side(i) ? 1 : 0;
    return result;
}

std::pair<double, double> min_marginals(const EnergyGraph& eg, std::uint32_t node) {
    if (node >= eg.account_count) throw Error("min_marginals: node index out of range");
    EnergyFlow ef = build_flow(eg);
    FlowSolver solver(ef.graph);
    const double big = clamp_capacity(eg);
    // Energies are read off as cut values (capacity sums) rather than the
    // accumulated flow; the clamped terminal arc is never cut.
    const CapacityBoost force_human{EnergyFlow::sink_arc(node), big};
    solver.solve(ef.source, ef.sink, {&force_human, 1});
    const double e0 = solver.cut_value();
    const CapacityBoost force_bot{EnergyFlow::source_arc(node), big};
    solver.solve(ef.source, ef.sink, {&force_bot, 1});
    const double e1 = solver.cut_value();
    return {e0, e1};
}

double marginal_probability(double e0, double e1) {
    const double d = e1 - e0;
    return d >= 0.0 ? std::exp(-d) / (1.0 + std::exp(-d)) : 1.0 / (1.0 + std::exp(d));
}

DetectionResult detect(const InteractionGraph& g, const EnergyParams& params,
                       const NodePrior& prior, const DetectOptions& options) {
    const auto start = std::chrono::steady_clock::now();

    DetectionResult result;
    result.node_count = g.node_count();
    result.edge_count = g.edge_count();

    const EnergyGraph eg = build_energy_graph(g, params, prior);
    const EnergyFlow ef = build_flow(eg);

    {
        FlowSolver solver(ef.graph);
        result.max_flow_value = solver.solve(ef.source, ef.sink);
        result.min_cut_value = solver.cut_value();
        result.map_bot.resize(eg.account_count);
        for (std::uint32_t i = 0; i < eg.account_count; ++i)
            result.map_bot[i] = solver.on_source_side(i) ? 1 : 0;
    }

    if (options.marginals && eg.account_count > 0) {
        result.p_bot.assign(eg.account_count, 0.0);
        const double big = clamp_capacity(eg);
        const double cut = result.min_cut_value;

        unsigned workers = options.workers != 0 ? options.workers
                                                : std::max(1u, std::thread::hardware_concurrency());
        workers = std::min<unsigned>(workers, static_cast<unsigned>(eg.account_count));

        std::atomic<std::uint32_t> next{0};
        auto run = [&]() {
            FlowSolver solver(ef.graph);
            for (std::uint32_t i = next.fetch_add(1); i < eg.account_count;
                 i = next.fetch_add(1)) {
                // One side's min-marginal is the global optimum; only the
                // opposite clamp needs a re-solve.
                const bool map_is_bot = result.map_bot[i] != 0;
                const CapacityBoost boost{map_is_bot ? EnergyFlow::sink_arc(i)
                                                     : EnergyFlow::source_arc(i),
                                          big};
                solver.solve(ef.source, ef.sink, {&boost, 1});
                const double other = solver.cut_value();
                const double e0 = map_is_bot ? other : cut;
                const double e1 = map_is_bot ? cut : other;
                result.p_bot[i] = marginal_probability(e0, e1);
            }
        };

        if (workers <= 1) {
            run();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
            for (auto& t : pool) t.join();
        }
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace botcut
