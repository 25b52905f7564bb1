#include "botcut/energy.hpp"

#include <cmath>
#include <sstream>

namespace botcut {

namespace {

constexpr double kSubmodularityTolerance = 1e-12;

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

EnergyParams EnergyParams::with_derived_epsilon(double gamma, double lambda1, double lambda2,
                                                double delta, double alpha1, double alpha2) {
    EnergyParams p;
    p.gamma = gamma;
    p.lambda1 = lambda1;
    p.lambda2 = lambda2;
    p.delta = delta;
    p.epsilon = lambda2 + lambda1 - 1.0 + delta;
    p.alpha1 = alpha1;
    p.alpha2 = alpha2;
    return p;
}

const char* constraint_name(Constraint c) {
    switch (c) {
        case Constraint::heterophily: return "heterophily";
        case Constraint::submodularity: return "submodularity";
        case Constraint::positivity: return "positivity";
        case Constraint::gamma: return "gamma";
        case Constraint::alpha1: return "alpha1";
        case Constraint::alpha2: return "alpha2";
    }
    return "?";
}

std::vector<Violation> validate(const EnergyParams& p) {
    std::vector<Violation> out;

    if (!(p.epsilon > 0.0 && p.epsilon < p.lambda2 && p.lambda2 < p.lambda1 && p.lambda1 < 1.0))
        out.push_back({Constraint::heterophily,
                       "requires 0 < epsilon < lambda2 < lambda1 < 1, got epsilon=" +
                           fmt(p.epsilon) + " lambda2=" + fmt(p.lambda2) +
                           " lambda1=" + fmt(p.lambda1)});

    const double derived = p.lambda2 + p.lambda1 - 1.0 + p.delta;
    if (p.delta < 0.0)
        out.push_back({Constraint::submodularity, "delta must be >= 0, got " + fmt(p.delta)});
    else if (std::abs(p.epsilon - derived) > kSubmodularityTolerance)
        out.push_back({Constraint::submodularity,
                       "requires epsilon = lambda2 + lambda1 - 1 + delta = " + fmt(derived) +
                           ", got " + fmt(p.epsilon)});

    if (3.0 * p.lambda2 + p.lambda1 < 2.0)
        out.push_back({Constraint::positivity,
                       "requires 3*lambda2 + lambda1 >= 2, got " +
                           fmt(3.0 * p.lambda2 + p.lambda1)});

    if (!(p.gamma > 0.0))
        out.push_back({Constraint::gamma, "gamma must be > 0, got " + fmt(p.gamma)});
    if (!(p.alpha1 > 0.0))
        out.push_back({Constraint::alpha1, "alpha1 must be > 0, got " + fmt(p.alpha1)});
    if (!(p.alpha2 > 0.0))
        out.push_back({Constraint::alpha2, "alpha2 must be > 0, got " + fmt(p.alpha2)});

    return out;
}

double base_link_energy(std::uint64_t weight, std::uint64_t z_out_src, std::uint64_t z_in_dst,
                        const EnergyParams& params) {
    if (z_out_src == 0 || z_in_dst == 0)
        throw Error("base_link_energy: zero endpoint strength");
    const double exponent = (params.alpha1 / static_cast<double>(z_out_src) - 1.0) +
                            (params.alpha2 / static_cast<double>(z_in_dst) - 1.0);
    // Numerically stable logistic: never exponentiates a positive argument.
    const double gate = exponent >= 0.0 ? std::exp(-exponent) / (1.0 + std::exp(-exponent))
                                        : 1.0 / (1.0 + std::exp(exponent));
    return static_cast<double>(weight) * params.gamma * gate;
}

double labeled_link_energy(double psi, LabelPair pair, const EnergyParams& params) {
    if (pair.src == Label::bot)
        return pair.dst == Label::bot ? params.lambda1 * psi : params.epsilon * psi;
    return pair.dst == Label::bot ? psi : params.lambda2 * psi;
}

double node_energy(const AccountId& account, Label label, const NodePrior& prior) {
    auto it = prior.p_bot.find(account);
    if (it == prior.p_bot.end()) return 0.0;
    const double p = it->second;
    if (!(p > 0.0 && p < 1.0))
        throw Error("node prior for \"" + account + "\" must be strictly inside (0,1), got " +
                    fmt(p));
    return label == Label::bot ? -std::log(p) : -std::log1p(-p);
}

NodePrior prior_from_labels(const GroundTruth& labels, double strength) {
    if (!(strength > 0.0 && strength < 1.0))
        throw Error("prior strength must be strictly inside (0,1), got " + fmt(strength));
    NodePrior prior;
    prior.p_bot.reserve(labels.labels.size());
    for (const auto& [id, label] : labels.labels)
        prior.p_bot.emplace(id, label == Label::bot ? strength : 1.0 - strength);
    return prior;
}

double configuration_energy(const InteractionGraph& g,
                            const std::unordered_map<AccountId, Label>& labels,
                            const EnergyParams& params, const NodePrior& prior) {
    std::vector<std::uint8_t> bits(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        auto it = labels.find(g.id_of(i));
        if (it == labels.end())
            throw Error("configuration_energy: no label for node \"" + g.id_of(i) + "\"");
        bits[i] = it->second == Label::bot ? 1 : 0;
    }
    return configuration_energy(g, bits, params, prior);
}

double configuration_energy(const InteractionGraph& g, const std::vector<std::uint8_t>& label_bits,
                            const EnergyParams& params, const NodePrior& prior) {
    if (label_bits.size() != g.node_count())
        throw Error("configuration_energy: label vector size mismatch");

    double total = 0.0;
    if (!prior.empty()) {
        for (std::uint32_t i = 0; i < g.node_count(); ++i)
            total += node_energy(g.id_of(i), label_bits[i] ? Label::bot : Label::human, prior);
    }
    for (const auto& e : g.edges()) {
        const double psi = base_link_energy(e.weight, g.out_strength(e.src), g.in_strength(e.dst), params);
        total += labeled_link_energy(
            psi, {label_bits[e.src] ? Label::bot : Label::human,
                  label_bits[e.dst] ? Label::bot : Label::human},
            params);
    }
    return total;
}

}  // namespace botcut
