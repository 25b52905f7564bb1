#pragma once
// Dinic max flow on real-valued capacities. Augmentations subtract the exact
// bottleneck value, so the bottleneck arc's residual becomes exactly zero and
// the algorithm needs no epsilon thresholds; admissibility is residual > 0.
// Arc insertion order fixes the adjacency iteration order, which makes the
// flow, the residual graph and the source-side partition deterministic.
//
// FlowGraph is the immutable structure (arcs + base capacities); FlowSolver
// owns the mutable per-solve state so one structure can be re-solved many
// times (optionally with per-arc capacity boosts) from worker threads, one
// solver per thread.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "botcut/errors.hpp"

namespace botcut {

class FlowGraph {
public:
    explicit FlowGraph(std::uint32_t node_count) : node_count_(node_count) {}

    // Returns the forward arc id; the paired reverse arc (id^1) has zero
    // capacity. Only valid before finalize().
    std::uint32_t add_arc(std::uint32_t from, std::uint32_t to, double capacity);

    // Symmetric capacity: both paired arcs get `capacity`.
    std::uint32_t add_undirected_arc(std::uint32_t a, std::uint32_t b, double capacity);

    void finalize();  // builds the adjacency index; graph becomes immutable

    std::uint32_t node_count() const { return node_count_; }
    std::size_t arc_count() const { return arc_to_.size(); }
    std::uint32_t arc_target(std::uint32_t arc) const { return arc_to_[arc]; }
    std::uint32_t arc_source(std::uint32_t arc) const { return arc_to_[arc ^ 1]; }
    double base_capacity(std::uint32_t arc) const { return base_cap_[arc]; }
    std::span<const double> base_capacities() const { return base_cap_; }

    std::span<const std::uint32_t> arcs_from(std::uint32_t node) const {
        return {adj_.data() + offsets_[node], adj_.data() + offsets_[node + 1]};
    }

private:
    std::uint32_t node_count_;
    std::vector<std::uint32_t> arc_to_;
    std::vector<double> base_cap_;
    std::vector<std::uint32_t> offsets_;  // size node_count_+1 after finalize
    std::vector<std::uint32_t> adj_;      // arc ids grouped by source node
    bool finalized_ = false;
};

// One extra capacity applied on top of an arc's base capacity for a single
// solve (used to clamp a node to one side of the cut).
struct CapacityBoost {
    std::uint32_t arc;
    double extra;
};

class FlowSolver {
public:
    explicit FlowSolver(const FlowGraph& graph);

    double solve(std::uint32_t source, std::uint32_t sink,
                 std::span<const CapacityBoost> boosts = {});

    // Nodes reachable from the source in the final residual graph. Saturated
    // arcs have residual exactly 0, so indifferent nodes land on the sink
    // side.
    bool on_source_side(std::uint32_t node) const { return level_[node] >= 0; }

    // Sum of effective capacities over arcs crossing source side -> sink
    // side; equals the max flow up to rounding.
    double cut_value() const;

    double residual(std::uint32_t arc) const { return residual_[arc]; }

private:
    bool bfs_levels(std::uint32_t source, std::uint32_t sink);
    double blocking_flow(std::uint32_t source, std::uint32_t sink);
    double effective_capacity(std::uint32_t arc) const;

    const FlowGraph* graph_;
    std::vector<double> residual_;
    std::vector<std::int32_t> level_;
    std::vector<std::uint32_t> iter_;
    std::vector<std::uint32_t> queue_;
    std::vector<std::uint32_t> path_;
    std::vector<CapacityBoost> boosts_;
};

}  // namespace botcut
