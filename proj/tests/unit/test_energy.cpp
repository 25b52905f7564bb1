#include "doctest.h"

#include <cmath>
#include <random>

#include "botcut/energy.hpp"
#include "oracles.hpp"

using namespace botcut;

namespace {

bool has_violation(const std::vector<Violation>& vs, Constraint c) {
    for (const auto& v : vs)
        if (v.constraint == c) return true;
    return false;
}

}  // namespace

TEST_CASE("stock defaults validate") {
    CHECK(validate(EnergyParams{}).empty());
}

TEST_CASE("swapped lambdas violate only the heterophily ordering") {
    const auto p = EnergyParams::with_derived_epsilon(1.0, 0.6, 0.8, 0.0, 100, 100);
    const auto vs = validate(p);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].constraint == Constraint::heterophily);
}

TEST_CASE("positivity violation is reported alone when the rest holds") {
    // epsilon = 0.3 + 0.9 - 1 = 0.2 keeps the equality and the ordering; only
    // 3*lambda2 + lambda1 = 1.8 < 2 fails.
    EnergyParams p;
    p.lambda1 = 0.9;
    p.lambda2 = 0.3;
    p.epsilon = 0.2;
    p.delta = 0.0;
    const auto vs = validate(p);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].constraint == Constraint::positivity);
}

TEST_CASE("inconsistent explicit epsilon violates submodularity") {
    EnergyParams p;  // defaults derive epsilon 0.4
    p.epsilon = 0.5;
    const auto vs = validate(p);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].constraint == Constraint::submodularity);
}

TEST_CASE("negative delta violates submodularity") {
    const auto p = EnergyParams::with_derived_epsilon(1.0, 0.8, 0.6, -0.05, 100, 100);
    CHECK(has_violation(validate(p), Constraint::submodularity));
}

TEST_CASE("non-positive scale parameters are flagged by name") {
    EnergyParams p;
    p.gamma = 0.0;
    p.alpha1 = -1.0;
    p.alpha2 = 0.0;
    const auto vs = validate(p);
    CHECK(has_violation(vs, Constraint::gamma));
    CHECK(has_violation(vs, Constraint::alpha1));
    CHECK(has_violation(vs, Constraint::alpha2));
}

TEST_CASE("submodularity equality tolerance is 1e-12") {
    EnergyParams p;
    p.epsilon = 0.4 + 5e-13;
    CHECK(validate(p).empty());
    p.epsilon = 0.4 + 5e-11;
    CHECK(has_violation(validate(p), Constraint::submodularity));
}

TEST_CASE("base link energy") {
    SUBCASE("strengths at the thresholds give gamma/2") {
        EnergyParams p;
        p.gamma = 3.0;
        CHECK(base_link_energy(1, 100, 100, p) == 1.5);
    }
    SUBCASE("saturated strengths approach the open-gate value") {
        // alpha/z -> 0 leaves exponent -2: the gate tops out at 1/(1+e^-2).
        EnergyParams p;
        const double expected = 1.0 / (1.0 + std::exp(-2.0));
        CHECK(base_link_energy(1, 1'000'000'000'000ull, 1'000'000'000'000ull, p) ==
              doctest::Approx(expected).epsilon(1e-9));
        CHECK(base_link_energy(1, 1'000'000'000'000ull, 1'000'000'000'000ull, p) < p.gamma);
    }
    SUBCASE("frozen spot value") {
        EnergyParams p;
        CHECK(base_link_energy(2, 200, 50, p) ==
              doctest::Approx(0.7550813375962908).epsilon(1e-12));
    }
    SUBCASE("zero strength throws") {
        CHECK_THROWS_AS(base_link_energy(1, 0, 5, EnergyParams{}), Error);
        CHECK_THROWS_AS(base_link_energy(1, 5, 0, EnergyParams{}), Error);
    }
    SUBCASE("strictly increasing in weight and both strengths") {
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<std::uint64_t> dist(1, 1000);
        const EnergyParams p = testing::random_valid_params(rng, std::vector{0.0, 0.05});
        for (int trial = 0; trial < 200; ++trial) {
            const std::uint64_t w = dist(rng), zo = dist(rng), zi = dist(rng);
            const double base = base_link_energy(w, zo, zi, p);
            CHECK(base_link_energy(w + 1, zo, zi, p) > base);
            CHECK(base_link_energy(w, zo + 1, zi, p) > base);
            CHECK(base_link_energy(w, zo, zi + 1, p) > base);
            CHECK(base > 0.0);
            CHECK(base < static_cast<double>(w) * p.gamma);
        }
    }
}

TEST_CASE("labeled link energies") {
    EnergyParams p;
    CHECK(labeled_link_energy(1.0, {Label::bot, Label::human}, p) == 0.4);
    CHECK(labeled_link_energy(0.0, {Label::human, Label::bot}, p) == 0.0);
    CHECK(labeled_link_energy(2.0, {Label::bot, Label::bot}, p) == doctest::Approx(1.6));

    SUBCASE("heterophily chain holds for any valid params and psi") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> psi_dist(0.0, 50.0);
        for (int trial = 0; trial < 200; ++trial) {
            const auto params = testing::random_valid_params(rng, std::vector{0.0, 0.05, 0.2});
            const double psi = psi_dist(rng);
            const double e10 = labeled_link_energy(psi, {Label::bot, Label::human}, params);
            const double e00 = labeled_link_energy(psi, {Label::human, Label::human}, params);
            const double e11 = labeled_link_energy(psi, {Label::bot, Label::bot}, params);
            const double e01 = labeled_link_energy(psi, {Label::human, Label::bot}, params);
            CHECK(e10 <= e00);
            CHECK(e00 <= e11);
            CHECK(e11 <= e01);
        }
    }
}

TEST_CASE("node energy") {
    const NodePrior none;
    CHECK(node_energy("a", Label::bot, none) == 0.0);
    CHECK(node_energy("a", Label::human, none) == 0.0);

    NodePrior prior;
    prior.p_bot["a"] = 0.5;
    CHECK(node_energy("a", Label::bot, prior) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(node_energy("a", Label::human, prior) == doctest::Approx(std::log(2.0)).epsilon(1e-15));

    prior.p_bot["b"] = 0.9;
    CHECK(node_energy("b", Label::bot, prior) ==
          doctest::Approx(0.10536051565782628).epsilon(1e-12));
    CHECK(node_energy("b", Label::human, prior) ==
          doctest::Approx(2.302585092994046).epsilon(1e-12));

    prior.p_bot["c"] = 1.0;
    CHECK_THROWS_AS(node_energy("c", Label::bot, prior), Error);
}

TEST_CASE("configuration energy") {
    EnergyParams unit_psi;  // alpha=1 and gamma=2 make psi equal the weight
    unit_psi.alpha1 = unit_psi.alpha2 = 1.0;
    unit_psi.gamma = 2.0;

    SUBCASE("empty graph is zero") {
        const auto g = build_graph(std::vector<EdgeRecord>{});
        CHECK(configuration_energy(g, std::vector<std::uint8_t>{}, unit_psi) == 0.0);
    }
    SUBCASE("single directed edge, bot retweets human") {
        const auto g = build_graph(std::vector<EdgeRecord>{{"a", "b", 1}});
        std::unordered_map<AccountId, Label> labels{{"a", Label::bot}, {"b", Label::human}};
        CHECK(configuration_energy(g, labels, unit_psi) == doctest::Approx(0.4).epsilon(1e-12));
    }
    SUBCASE("reciprocal edges add both directed terms") {
        const auto g = build_graph(std::vector<EdgeRecord>{{"a", "b", 1}, {"b", "a", 2}});
        const auto a = *g.index_of("a");
        const auto b = *g.index_of("b");
        const double psi_ab =
            base_link_energy(1, g.out_strength(a), g.in_strength(b), unit_psi);
        const double psi_ba =
            base_link_energy(2, g.out_strength(b), g.in_strength(a), unit_psi);
        std::unordered_map<AccountId, Label> labels{{"a", Label::bot}, {"b", Label::human}};
        // a->b is bot-retweets-human (epsilon), b->a is human-retweets-bot (full).
        const double expected = 0.4 * psi_ab + 1.0 * psi_ba;
        CHECK(configuration_energy(g, labels, unit_psi) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("missing label names the node") {
        const auto g = build_graph(std::vector<EdgeRecord>{{"a", "b", 1}});
        std::unordered_map<AccountId, Label> labels{{"a", Label::bot}};
        CHECK_THROWS_WITH_AS(configuration_energy(g, labels, unit_psi),
                             doctest::Contains("\"b\""), Error);
    }
    SUBCASE("all-human labeling equals lambda2 times total psi") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = testing::random_graph(rng, {.max_nodes = 8});
            const auto params = testing::random_valid_params(rng, std::vector{0.0, 0.05});
            double psi_sum = 0.0;
            for (const auto& e : g.edges())
                psi_sum +=
                    base_link_energy(e.weight, g.out_strength(e.src), g.in_strength(e.dst), params);
            const std::vector<std::uint8_t> all_human(g.node_count(), 0);
            CHECK(configuration_energy(g, all_human, params) ==
                  doctest::Approx(params.lambda2 * psi_sum).epsilon(1e-12));
        }
    }
    SUBCASE("invariant under account relabeling") {
        std::mt19937_64 rng(23);
        const auto params = testing::random_valid_params(rng, std::vector{0.0});
        const std::vector<EdgeRecord> records{
            {"x", "y", 3}, {"y", "z", 1}, {"z", "x", 7}, {"x", "z", 2}};
        std::vector<EdgeRecord> renamed;
        auto rename = [](const AccountId& id) { return "account_" + id; };
        for (const auto& r : records) renamed.push_back({rename(r.src), rename(r.dst), r.count});

        const auto g1 = build_graph(records);
        const auto g2 = build_graph(renamed);
        std::unordered_map<AccountId, Label> l1{
            {"x", Label::bot}, {"y", Label::human}, {"z", Label::bot}};
        std::unordered_map<AccountId, Label> l2;
        for (const auto& [id, label] : l1) l2[rename(id)] = label;
        CHECK(configuration_energy(g1, l1, params) == configuration_energy(g2, l2, params));
    }
}

TEST_CASE("prior_from_labels maps bot to strength") {
    GroundTruth truth;
    truth.labels = {{"a", Label::bot}, {"b", Label::human}};
    const auto prior = prior_from_labels(truth, 0.9);
    CHECK(prior.p_bot.at("a") == 0.9);
    CHECK(prior.p_bot.at("b") == doctest::Approx(0.1));
    CHECK_THROWS_AS(prior_from_labels(truth, 1.0), Error);
}
