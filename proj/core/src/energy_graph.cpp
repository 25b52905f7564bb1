#include "botcut/energy_graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace botcut {

namespace {

constexpr double kClampTolerance = 1e-12;

// The factors inherit up to 1e-12 of slack from the submodularity equality
// (plus rounding), so anything inside that band is zero by construction;
// with delta = 0 this makes every pairwise capacity exactly 0. A factor
// below -1e-12 means the parameters escaped validation.
void clamp_factor(double& f) {
    if (std::abs(f) <= kClampTolerance) {
        f = 0.0;
        return;
    }
    if (f < 0.0)
        throw Error("energy graph produced a negative capacity; parameters violate the "
                    "feasible region");
}

}  // namespace

double EnergyGraph::total_capacity() const {
    double total = 0.0;
    for (double c : source_capacity) total += c;
    for (double c : sink_capacity) total += c;
    for (const auto& p : pair_capacities) total += p.capacity;
    return total;
}

double EnergyGraph::cut_weight(const std::vector<std::uint8_t>& label_bits) const {
    double w = 0.0;
    for (std::size_t i = 0; i < account_count; ++i)
        w += label_bits[i] ? sink_capacity[i] : source_capacity[i];
    for (const auto& p : pair_capacities)
        if (label_bits[p.a] != label_bits[p.b]) w += p.capacity;
    return w;
}

EnergyGraph build_energy_graph(const InteractionGraph& g, const EnergyParams& params,
                               const NodePrior& prior) {
    if (auto violations = validate(params); !violations.empty()) {
        std::string msg = "invalid energy parameters:";
        for (const auto& v : violations)
            msg += std::string(" [") + constraint_name(v.constraint) + "] " + v.detail + ";";
        throw Error(msg);
    }

    const std::size_t n = g.node_count();
    EnergyGraph eg;
    eg.account_count = n;
    eg.source_capacity.assign(n, 0.0);
    eg.sink_capacity.assign(n, 0.0);

    for (std::uint32_t i = 0; i < n; ++i) {
        eg.source_capacity[i] = node_energy(g.id_of(i), Label::human, prior);
        eg.sink_capacity[i] = node_energy(g.id_of(i), Label::bot, prior);
    }

    // Every labeled energy is a fixed multiple of psi, so the per-edge
    // capacity contributions are psi times five per-parameter factors.
    // Computing the factors once (from the unit energies) and clamping them
    // keeps rounding noise from scaling with the edge weights: with delta=0
    // the pair factor cancels to exactly zero here instead of leaving
    // O(psi*eps) dust on every edge.
    const double u00 = labeled_link_energy(1.0, {Label::human, Label::human}, params);
    const double u01 = labeled_link_energy(1.0, {Label::human, Label::bot}, params);
    const double u10 = labeled_link_energy(1.0, {Label::bot, Label::human}, params);
    const double u11 = labeled_link_energy(1.0, {Label::bot, Label::bot}, params);

    double src_to_source = 0.5 * u00 + 0.25 * (u01 - u10);  // out-edge -> c(s, src)
    double src_to_sink = 0.5 * u11 + 0.25 * (u10 - u01);    // out-edge -> c(src, t)
    double dst_to_source = 0.5 * u00 + 0.25 * (u10 - u01);  // in-edge  -> c(s, dst)
    double dst_to_sink = 0.5 * u11 + 0.25 * (u01 - u10);    // in-edge  -> c(dst, t)
    double pair_factor = 0.5 * (u10 + u01 - u00 - u11);
    for (double* f : {&src_to_source, &src_to_sink, &dst_to_source, &dst_to_sink, &pair_factor})
        clamp_factor(*f);

    std::unordered_map<std::uint64_t, double> pair_caps;
    pair_caps.reserve(g.edge_count());

    for (const auto& e : g.edges()) {
        const double psi =
            base_link_energy(e.weight, g.out_strength(e.src), g.in_strength(e.dst), params);
        eg.source_capacity[e.src] += psi * src_to_source;
        eg.sink_capacity[e.src] += psi * src_to_sink;
        eg.source_capacity[e.dst] += psi * dst_to_source;
        eg.sink_capacity[e.dst] += psi * dst_to_sink;

        const std::uint32_t a = std::min(e.src, e.dst);
        const std::uint32_t b = std::max(e.src, e.dst);
        pair_caps[(static_cast<std::uint64_t>(a) << 32) | b] += psi * pair_factor;
    }

    eg.pair_capacities.reserve(pair_caps.size());
    for (const auto& [key, cap] : pair_caps)
        eg.pair_capacities.push_back({static_cast<std::uint32_t>(key >> 32),
                                      static_cast<std::uint32_t>(key & 0xffffffffu), cap});
    std::sort(eg.pair_capacities.begin(), eg.pair_capacities.end(),
              [](const auto& x, const auto& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });

    return eg;
}

}  // namespace botcut
