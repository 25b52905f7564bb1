#pragma once
// Directed retweet interaction graph: accounts as nodes, one weighted edge
// per (src, dst) pair aggregating all retweet events, plus cached per-node
// strengths. Graphs are immutable after construction and therefore safe to
// read from any number of threads.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "botcut/errors.hpp"

namespace botcut {

using AccountId = std::string;

enum class Label : std::uint8_t { human = 0, bot = 1 };

const char* label_name(Label label);                 // "human" / "bot"
std::optional<Label> parse_label(std::string_view);  // nullopt on unknown token

// One retweet-interaction record: src retweeted dst `count` times.
struct EdgeRecord {
    AccountId src;
    AccountId dst;
    std::uint64_t count = 1;
};

class InteractionGraph {
public:
    struct Edge {
        std::uint32_t src;
        std::uint32_t dst;
        std::uint64_t weight;

        bool operator==(const Edge&) const = default;
    };

    InteractionGraph() = default;

    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::uint64_t total_weight() const { return total_weight_; }

    // Node indices are assigned by sorting account ids, so any ingest order
    // of the same records produces the identical graph.
    const AccountId& id_of(std::uint32_t index) const { return ids_[index]; }
    std::optional<std::uint32_t> index_of(const AccountId& id) const;

    std::uint64_t out_strength(std::uint32_t index) const { return out_strength_[index]; }
    std::uint64_t in_strength(std::uint32_t index) const { return in_strength_[index]; }

    // Edges sorted by (src, dst); the slice for one src is contiguous.
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Edge> out_edges(std::uint32_t src) const;

    bool operator==(const InteractionGraph& other) const {
        return ids_ == other.ids_ && edges_ == other.edges_;
    }

    friend InteractionGraph build_graph(std::span<const EdgeRecord> records,
                                        std::size_t* self_loops_dropped);

private:
    std::vector<AccountId> ids_;  // sorted
    std::unordered_map<AccountId, std::uint32_t> index_;
    std::vector<Edge> edges_;  // sorted by (src, dst)
    std::vector<std::uint32_t> out_offsets_;  // CSR over edges_, size node_count()+1
    std::vector<std::uint64_t> out_strength_;
    std::vector<std::uint64_t> in_strength_;
    std::uint64_t total_weight_ = 0;
};

// Aggregates duplicate (src, dst) records by summing counts and drops
// self-loops (src == dst), reporting how many were dropped. Records with
// count == 0 are rejected.
InteractionGraph build_graph(std::span<const EdgeRecord> records,
                             std::size_t* self_loops_dropped = nullptr);

struct GroundTruth {
    std::unordered_map<AccountId, Label> labels;

    std::optional<Label> label_of(const AccountId& id) const {
        auto it = labels.find(id);
        if (it == labels.end()) return std::nullopt;
        return it->second;
    }
    std::size_t count(Label label) const;
};

struct LabelRecord {
    AccountId account;
    std::string label_token;
};

// Consistent duplicates collapse; conflicting duplicates or unknown label
// tokens raise InputError naming the offender.
GroundTruth build_ground_truth(std::span<const LabelRecord> records);

struct DegreeRow {
    AccountId account;
    std::uint64_t z_out = 0;
    std::uint64_t z_in = 0;
    std::uint32_t unique_out_neighbors = 0;
    std::uint32_t unique_in_neighbors = 0;

    bool operator==(const DegreeRow&) const = default;
};

// One row per node in canonical (sorted id) order.
std::vector<DegreeRow> degree_summary(const InteractionGraph& g);

}  // namespace botcut
