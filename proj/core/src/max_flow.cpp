#include "botcut/max_flow.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

namespace botcut {

std::uint32_t FlowGraph::add_arc(std::uint32_t from, std::uint32_t to, double capacity) {
    if (finalized_) throw Error("FlowGraph::add_arc after finalize");
    if (from >= node_count_ || to >= node_count_ || from == to)
        throw Error("FlowGraph::add_arc: bad endpoints");
    if (capacity < 0.0) throw Error("FlowGraph::add_arc: negative capacity");
    const auto id = static_cast<std::uint32_t>(arc_to_.size());
    arc_to_.push_back(to);
    base_cap_.push_back(capacity);
    arc_to_.push_back(from);
    base_cap_.push_back(0.0);
    return id;
}

std::uint32_t FlowGraph::add_undirected_arc(std::uint32_t a, std::uint32_t b, double capacity) {
    const auto id = add_arc(a, b, capacity);
    base_cap_[id ^ 1] = capacity;
    return id;
}

void FlowGraph::finalize() {
    if (finalized_) return;
    offsets_.assign(node_count_ + 1, 0);
    for (std::uint32_t arc = 0; arc < arc_to_.size(); ++arc)
        ++offsets_[arc_source(arc) + 1];
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    adj_.resize(arc_to_.size());
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::uint32_t arc = 0; arc < arc_to_.size(); ++arc)
        adj_[cursor[arc_source(arc)]++] = arc;
    finalized_ = true;
}

FlowSolver::FlowSolver(const FlowGraph& graph) : graph_(&graph) {
    residual_.resize(graph.arc_count());
    level_.resize(graph.node_count());
    iter_.resize(graph.node_count());
    queue_.reserve(graph.node_count());
}

double FlowSolver::effective_capacity(std::uint32_t arc) const {
    double c = graph_->base_capacity(arc);
    for (const auto& b : boosts_)
        if (b.arc == arc) c += b.extra;
    return c;
}

double FlowSolver::solve(std::uint32_t source, std::uint32_t sink,
                         std::span<const CapacityBoost> boosts) {
    const auto base = graph_->base_capacities();
    std::memcpy(residual_.data(), base.data(), base.size() * sizeof(double));
    boosts_.assign(boosts.begin(), boosts.end());
    for (const auto& b : boosts_) residual_[b.arc] += b.extra;

    double total = 0.0;
    while (bfs_levels(source, sink)) total += blocking_flow(source, sink);
    // The final (failed) BFS marks exactly the residual-reachable nodes, so
    // level_ doubles as the source-side partition.
    return total;
}

bool FlowSolver::bfs_levels(std::uint32_t source, std::uint32_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    queue_.push_back(source);
    level_[source] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const std::uint32_t u = queue_[head];
        for (std::uint32_t arc : graph_->arcs_from(u)) {
            const std::uint32_t v = graph_->arc_target(arc);
            if (residual_[arc] > 0.0 && level_[v] < 0) {
                level_[v] = level_[u] + 1;
                queue_.push_back(v);
            }
        }
    }
    return level_[sink] >= 0;
}

double FlowSolver::blocking_flow(std::uint32_t source, std::uint32_t sink) {
    // iter_ holds the scan position within arcs_from(v) for this phase.
    std::fill(iter_.begin(), iter_.end(), 0u);

    double pushed_total = 0.0;
    path_.clear();
    std::uint32_t u = source;
    while (true) {
        if (u == sink) {
            double delta = std::numeric_limits<double>::infinity();
            for (std::uint32_t arc : path_) delta = std::min(delta, residual_[arc]);
            for (std::uint32_t arc : path_) {
                residual_[arc] -= delta;
                residual_[arc ^ 1] += delta;
            }
            pushed_total += delta;
            // Rewind to the first saturated arc on the path.
            std::size_t keep = 0;
            while (keep < path_.size() && residual_[path_[keep]] > 0.0) ++keep;
            u = graph_->arc_source(path_[keep]);
            path_.resize(keep);
            continue;
        }

        bool advanced = false;
        const auto arcs = graph_->arcs_from(u);
        for (; iter_[u] < arcs.size(); ++iter_[u]) {
            const std::uint32_t arc = arcs[iter_[u]];
            const std::uint32_t v = graph_->arc_target(arc);
            if (residual_[arc] > 0.0 && level_[v] == level_[u] + 1) {
                path_.push_back(arc);
                u = v;
                advanced = true;
                break;
            }
        }
        if (advanced) continue;

        if (u == source) break;  // blocking flow complete
        level_[u] = -1;          // dead end in this phase
        u = graph_->arc_source(path_.back());
        path_.pop_back();
    }
    return pushed_total;
}

double FlowSolver::cut_value() const {
    double total = 0.0;
    for (std::uint32_t arc = 0; arc < graph_->arc_count(); ++arc) {
        if (on_source_side(graph_->arc_source(arc)) && !on_source_side(graph_->arc_target(arc)))
            total += effective_capacity(arc);
    }
    return total;
}

}  // namespace botcut
