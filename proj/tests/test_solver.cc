#include <wdom/generators.hh>
#include <wdom/harness.hh>
#include <wdom/solver.hh>

#include <doctest.h>

#include <random>

using namespace wdom;

namespace
{
    auto random_graph(int n, double p, std::mt19937 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (coin(rng))
                    edges.emplace_back(i, j);
        return Graph(n, edges);
    }
}

TEST_CASE("weight vectors")
{
    auto w = WeightVector::parse("(2, 2, 1)");
    CHECK(w == WeightVector{2, 2, 1});
    CHECK(w.max_label() == 2);
    CHECK(w.is_monotone());
    CHECK_FALSE(WeightVector({1, 2}).is_monotone());
    CHECK(WeightVector{2, 1, 0}.precedes({2, 2, 1}));
    CHECK_FALSE(WeightVector{2, 1}.precedes({2, 2, 1}));
    CHECK(w.to_string() == "(2,2,1)");
    CHECK_THROWS_AS(WeightVector::parse("0,1"), WeightVectorError);
    CHECK_THROWS_AS(WeightVector::parse("2"), WeightVectorError);
    CHECK_THROWS_AS(WeightVector::parse("2,-1"), WeightVectorError);
    CHECK_THROWS_AS(WeightVector::parse("2,x"), WeightVectorError);
}

TEST_CASE("validate and weight")
{
    CHECK(validate(cycle(3), {2, 2, 2}, LabelFunction({1, 1, 1})));
    CHECK(validate(fixture("fig2"), {2, 2, 0}, LabelFunction({2, 1, 1, 2, 0, 0, 0, 0, 0, 0})));
    CHECK(weight(LabelFunction({2, 1, 1, 2, 0, 0, 0, 0, 0, 0})) == 6);
    CHECK_FALSE(validate(path(3), {2, 1, 0}, LabelFunction({0, 1, 0})));
    CHECK(weight(LabelFunction(std::vector<int>(5, 0))) == 0);
    CHECK(weight(LabelFunction(std::vector<int>(4, 2))) == 8);
    CHECK_THROWS_AS(validate(path(3), {1, 0}, LabelFunction({0, 1})), WeightVectorError);
    CHECK_THROWS_AS(validate(path(3), {1, 0}, LabelFunction({0, 2, 0})), WeightVectorError);
}

TEST_CASE("feasibility")
{
    CHECK(exists_w_dominating(cycle(4), {2, 2, 2}));
    CHECK_FALSE(exists_w_dominating(path(2), {3, 3, 3}));
    CHECK(exists_w_dominating(complete(3), {1, 0}));
    CHECK(exists_w_dominating(Graph(), {5, 5}));
    CHECK(gamma_w_bruteforce(path(2), {3, 2, 2})->value == 4);
    CHECK_FALSE(gamma_w_bruteforce(path(2), {3, 3, 3}).has_value());
    CHECK_FALSE(gamma_w(path(2), {3, 3, 3}).has_value());
}

TEST_CASE("known values")
{
    CHECK(gamma_w_bruteforce(cycle(3), {2, 2, 0})->value == 2);
    CHECK(gamma_w_bruteforce(complete(4), {2, 2, 2})->value == 3);
    CHECK(gamma_w(cycle(7), {2, 2, 1})->value == 6);
    CHECK(gamma_w(path(5), {2, 2, 2})->value == 6);
    CHECK(gamma_w(fixture("fig1_g3"), {2, 1, 0})->value == 6);
    CHECK(gamma_w(corona(path(2), complete(2)), {2, 1, 0})->value == 4);
    CHECK(gamma_w(Graph(), {2, 1})->value == 0);
}

TEST_CASE("solve results carry a valid witness of the stated weight")
{
    for (const auto & g : {cycle(6), path(5), fixture("fig2"), family_hk(3, 1)})
        for (const auto & w : harness::vector_battery()) {
            auto r = gamma_w(g, w);
            if (! r)
                continue;
            CHECK(validate(g, w, r->witness));
            CHECK(weight(r->witness) == r->value);
            CHECK(r->vector == w);
        }
}

TEST_CASE("branch and bound agrees with the oracle on random graphs of order six")
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(6, 0.2 + 0.6 * (trial % 4) / 3.0, rng);
        for (const auto & w : harness::vector_battery()) {
            auto a = gamma_w_bruteforce(g, w), b = gamma_w(g, w);
            REQUIRE(a.has_value() == b.has_value());
            if (a) {
                CHECK(a->value == b->value);
                CHECK(a->witness == b->witness);
            }
        }
    }
}

TEST_CASE("monotone feasibility is w_l <= l * delta")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : enumerate_labeled_graphs(n))
            for (const auto & w : harness::vector_battery()) {
                int l = w.max_label();
                CHECK(gamma_w(g, w).has_value() == (w[l] <= l * min_degree(g)));
            }
}

TEST_CASE("oracle budget")
{
    CHECK_THROWS_AS(gamma_w_bruteforce(cycle(12), {2, 2, 1}, 1000), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_optimal(cycle(12), {2, 2, 1}, 1000), BudgetExceeded);
    CHECK(gamma_w_bruteforce(cycle(6), {2, 2, 1}, 729)->value == 6);
}

TEST_CASE("optimal enumeration")
{
    auto p3 = enumerate_optimal(path(3), {1, 0, 0});
    REQUIRE(p3.size() == 1);
    CHECK(p3[0] == LabelFunction({0, 1, 0}));

    auto c3 = enumerate_optimal(cycle(3), {2, 2, 2});
    REQUIRE(c3.size() == 1);
    CHECK(c3[0] == LabelFunction({1, 1, 1}));

    bool found = false;
    for (const auto & f : enumerate_optimal(path(6), {2, 2, 2}))
        found = found || (f[5] == 0 && f[2] == 0 && f[4] == 2 && f[3] == 2);
    CHECK(found);

    auto all = enumerate_optimal(cycle(5), {2, 1, 0});
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto & f : all)
        CHECK(weight(f) == 4);
    CHECK(enumerate_optimal(path(2), {3, 3, 3}).empty());
}

TEST_CASE("nu_w")
{
    CHECK(nu_w(cycle(3), {2, 2, 2}) == 0);
    CHECK(nu_w(path(3), {1, 0}) == 2);
    CHECK_FALSE(nu_w(path(2), {3, 3, 3}).has_value());
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : enumerate_labeled_graphs(n, {true, 0}))
            if (auto v = gamma_value(g, {2, 1}))
                CHECK(nu_w(g, {2, 1}) == n - *v);
}

TEST_CASE("named parameters")
{
    using Tag = DominationKind::Tag;
    CHECK(DominationKind{Tag::gamma_times_k_t, 2}.vector() == WeightVector{2, 2});
    CHECK(DominationKind{Tag::gamma_brace_k, 3}.vector() == WeightVector{3, 2, 1, 0});
    CHECK(DominationKind::parse("gamma_I").vector() == WeightVector{2, 0, 0});
    CHECK(DominationKind::parse("gamma_tI").vector() == WeightVector{2, 1, 1});
    CHECK(DominationKind::parse("gamma_k:3").vector() == WeightVector{3, 0});
    CHECK_THROWS_AS(DominationKind::parse("gamma_k"), WeightVectorError);
    CHECK_THROWS_AS(DominationKind::parse("gamma_t:2"), WeightVectorError);
    CHECK_THROWS_AS(DominationKind::parse("omega"), WeightVectorError);

    CHECK(named_gamma(cycle(6), DominationKind::parse("gamma_brace_k:2"))->value == 4);
    CHECK(named_gamma(path(4), DominationKind::parse("gamma_t"))->value == 2);
    CHECK_FALSE(named_gamma(empty_graph(2), DominationKind::parse("gamma_t")).has_value());
}

TEST_CASE("italian domination of lexicographic products")
{
    auto a = italian_lex(path(4), complete(2));
    CHECK(a.result.vector == WeightVector{2, 1, 0});
    CHECK(a.result.value == 4);

    auto b = italian_lex(cycle(3), cycle(4));
    CHECK(b.result.vector == WeightVector{2, 2, 0});
    CHECK(b.result.value == 2);

    auto c = italian_lex(cycle(4), path(4));
    CHECK(c.gamma2_h == 3);
    CHECK(c.result.vector == WeightVector{2, 2, 1});
    CHECK(c.result.value == gamma_value(lexicographic_product(cycle(4), path(4)), {2, 0, 0}));

    auto d = italian_lex(path(3), empty_graph(3));
    CHECK(d.result.vector == WeightVector{2, 2, 2, 0});
    CHECK(d.result.value == gamma_value(lexicographic_product(path(3), empty_graph(3)), {2, 0, 0}));

    // gamma(H) = 2 for hk(3,2), so it is dispatched to (2,2,1), not (2,2,2,0).
    auto e = italian_lex(path(3), family_hk(3, 2));
    CHECK(e.gamma_h == 2);
    CHECK(e.result.vector == WeightVector{2, 2, 1});

    // An isolated vertex in G is allowed only in the gamma_I(H) = gamma(H) = 3 case.
    CHECK(italian_lex(Graph(1), empty_graph(3)).result.value == 3);
    CHECK_THROWS_AS(italian_lex(Graph(1), complete(2)), HypothesisError);
    CHECK_THROWS_AS(italian_lex(path(2), Graph(1)), HypothesisError);
    CHECK_THROWS_AS(italian_lex(Graph(), complete(2)), HypothesisError);
}

TEST_CASE("json form")
{
    auto j = to_json(gamma_w(cycle(3), {2, 2, 2}));
    CHECK(j["value"] == 3);
    CHECK(j["witness"] == nlohmann::json::array({1, 1, 1}));
    CHECK(j["method"] == "branch_and_bound");
    CHECK(to_json(std::optional<SolveResult>{}) == nlohmann::json{{"feasible", false}});
}
