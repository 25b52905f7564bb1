#include "botcut/interaction_graph.hpp"

#include <algorithm>
#include <map>

namespace botcut {

const char* label_name(Label label) {
    return label == Label::bot ? "bot" : "human";
}

std::optional<Label> parse_label(std::string_view token) {
    if (token == "bot") return Label::bot;
    if (token == "human") return Label::human;
    return std::nullopt;
}

std::optional<std::uint32_t> InteractionGraph::index_of(const AccountId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::span<const InteractionGraph::Edge> InteractionGraph::out_edges(std::uint32_t src) const {
    return {edges_.data() + out_offsets_[src], edges_.data() + out_offsets_[src + 1]};
}

InteractionGraph build_graph(std::span<const EdgeRecord> records,
                             std::size_t* self_loops_dropped) {
    std::size_t dropped = 0;

    // std::map keeps pairs in lexicographic (src, dst) order, which combined
    // with sorted node ids yields a canonical, order-independent graph.
    std::map<std::pair<AccountId, AccountId>, std::uint64_t> weights;
    std::map<AccountId, std::uint32_t> nodes;

    for (const EdgeRecord& r : records) {
        if (r.src.empty() || r.dst.empty())
            throw InputError("edge record with empty account id");
        if (r.count == 0)
            throw InputError("edge record with non-positive count");
        nodes.emplace(r.src, 0);
        nodes.emplace(r.dst, 0);
        if (r.src == r.dst) {
            ++dropped;
            continue;
        }
        weights[{r.src, r.dst}] += r.count;
    }

    InteractionGraph g;
    g.ids_.reserve(nodes.size());
    for (auto& [id, index] : nodes) {
        index = static_cast<std::uint32_t>(g.ids_.size());
        g.ids_.push_back(id);
    }
    g.index_.reserve(nodes.size());
    for (const auto& [id, index] : nodes) g.index_.emplace(id, index);

    g.out_strength_.assign(g.ids_.size(), 0);
    g.in_strength_.assign(g.ids_.size(), 0);
    g.edges_.reserve(weights.size());
    for (const auto& [pair, w] : weights) {
        InteractionGraph::Edge e{nodes.at(pair.first), nodes.at(pair.second), w};
        g.edges_.push_back(e);
        g.out_strength_[e.src] += w;
        g.in_strength_[e.dst] += w;
        g.total_weight_ += w;
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const auto& a, const auto& b) {
        return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
    });

    g.out_offsets_.assign(g.ids_.size() + 1, 0);
    for (const auto& e : g.edges_) ++g.out_offsets_[e.src + 1];
    for (std::size_t i = 1; i < g.out_offsets_.size(); ++i)
        g.out_offsets_[i] += g.out_offsets_[i - 1];

    if (self_loops_dropped) *self_loops_dropped = dropped;
    return g;
}

std::size_t GroundTruth::count(Label label) const {
    std::size_t n = 0;
    for (const auto& [id, l] : labels)
        if (l == label) ++n;
    return n;
}

GroundTruth build_ground_truth(std::span<const LabelRecord> records) {
    GroundTruth truth;
    for (const LabelRecord& r : records) {
        if (r.account.empty()) throw InputError("label record with empty account id");
        auto label = parse_label(r.label_token);
        if (!label)
            throw InputError("unknown label token \"" + r.label_token + "\" for account \"" +
                             r.account + "\" (expected bot or human)");
        auto [it, inserted] = truth.labels.emplace(r.account, *label);
        if (!inserted && it->second != *label)
            throw InputError("conflicting labels for account \"" + r.account + "\"");
    }
    return truth;
}

std::vector<DegreeRow> degree_summary(const InteractionGraph& g) {
    std::vector<DegreeRow> rows(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        rows[i].account = g.id_of(i);
        rows[i].z_out = g.out_strength(i);
        rows[i].z_in = g.in_strength(i);
    }
    for (const auto& e : g.edges()) {
        ++rows[e.src].unique_out_neighbors;
        ++rows[e.dst].unique_in_neighbors;
    }
    return rows;
}

}  // namespace botcut
