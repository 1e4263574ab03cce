#include <wdom/generators.hh>
#include <wdom/solver.hh>

#include <doctest.h>

#include <algorithm>

using namespace wdom;

TEST_CASE("standard families")
{
    CHECK(path(3).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(cycle(4).edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(empty_graph(2).order() == 2);
    CHECK(empty_graph(2).size() == 0);
    CHECK(complete(5).size() == 10);
    CHECK(star(1).order() == 1);
    CHECK_THROWS_AS(cycle(2), GraphError);
    CHECK_THROWS_AS(star(0), GraphError);
    CHECK_THROWS_AS(path(-1), GraphError);
}

TEST_CASE("lexicographic product")
{
    CHECK(lexicographic_product(path(2), complete(2)) == complete(4));

    auto g = cycle(4), h = path(3);
    auto p = lexicographic_product(g, h);
    REQUIRE(p.order() == 12);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 3; ++v)
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 3; ++y) {
                    bool expected = g.adjacent(u, x) || (u == x && h.adjacent(v, y));
                    CHECK(p.adjacent(product_vertex(u, v, 3), product_vertex(x, y, 3)) == expected);
                }
    CHECK(gamma_value(lexicographic_product(path(4), complete(2)), {2, 0, 0}) == 4);
}

TEST_CASE("corona")
{
    CHECK(corona(path(2), Graph(1)) == Graph(4, {{0, 1}, {0, 2}, {1, 3}}));
    CHECK(corona(Graph(1), complete(2)) == complete(3));
    auto c = corona(path(2), complete(2));
    CHECK(c.order() == 6);
    CHECK(gamma_value(c, {1, 0}) == 2);
}

TEST_CASE("family hk")
{
    auto g = family_hk(3, 2);
    CHECK(g.order() == 9);
    for (int v = 0; v < 3; ++v)
        CHECK(g.degree(v) == 6);
    CHECK(family_hk(4, 1).order() == 10);
    CHECK_THROWS_AS(family_hk(2, 1), GraphError);
    CHECK_THROWS_AS(family_hk(3, 0), GraphError);
    for (auto [k, r] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 1}})
        CHECK(gamma_w_bruteforce(family_hk(k, r), {2, 0, 0})->value == k);
}

TEST_CASE("subdivided star")
{
    auto g = subdivided_star(3);
    CHECK(g.order() == 5);
    CHECK(g.size() == 4);
    CHECK(leaves(g).size() == 3);
    CHECK_THROWS_AS(subdivided_star(2), GraphError);
}

TEST_CASE("fixtures")
{
    auto g2 = fixture("fig1_g2");
    CHECK(g2.order() == 6);
    CHECK(g2.size() == 9);
    CHECK(g2 == family_hk(3, 1));

    auto fig2 = fixture_data("fig2");
    CHECK(fig2.graph.order() == 10);
    // Exactly one cycle: a connected graph with n edges.
    CHECK(fig2.graph.is_connected());
    CHECK(fig2.graph.size() == 10);
    auto name_set = [&](const VertexSet & s) {
        std::vector<std::string> names;
        for (auto v : s)
            names.push_back(fig2.vertex_names[v]);
        return names;
    };
    CHECK(name_set(leaves(fig2.graph)) == std::vector<std::string>{"E", "F", "I", "J"});
    CHECK(name_set(supports(fig2.graph)) == std::vector<std::string>{"A", "D"});

    auto fig3 = fixture("fig3");
    CHECK(fig3.order() == 16);
    CHECK(max_degree(fig3) == 5);

    CHECK(fixture("subdivided_star(4)") == subdivided_star(4));
    CHECK_THROWS_AS(fixture("nope"), GraphError);

    for (const auto & name : fixture_names())
        for (const auto & w : fixture_data(name).witnesses)
            CHECK(validate(fixture(name), WeightVector(w.vector), LabelFunction(w.labels)));
}

TEST_CASE("labelled enumeration")
{
    CHECK(enumerate_labeled_graphs(3).size() == 8);
    CHECK(enumerate_labeled_graphs(4, {true, 0}).size() == 38);
    CHECK(enumerate_labeled_graphs(5, {true, 0}).size() == 728);
    auto k2 = enumerate_labeled_graphs(2, {false, 1});
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == complete(2));
    CHECK(enumerate_labeled_graphs(0).size() == 1);
    CHECK_THROWS_AS(enumerate_labeled_graphs(8), GraphError);

    auto all4 = enumerate_labeled_graphs(4);
    CHECK(all4.size() == 64);
    CHECK(std::adjacent_find(all4.begin(), all4.end()) == all4.end());
}
