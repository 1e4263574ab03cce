#include <wdom/generators.hh>
#include <wdom/graph.hh>

#include <doctest.h>

using namespace wdom;

TEST_CASE("construction keeps adjacency sorted, symmetric and loop-free")
{
    Graph g(4, {{2, 0}, {0, 1}, {3, 0}, {1, 0}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.neighbours(0) == std::vector<Vertex>{1, 2, 3});
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbours(u)) {
            CHECK(u != v);
            CHECK(g.adjacent(v, u));
        }
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("construction rejects loops, bad endpoints and negative order")
{
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{-1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(-1), GraphError);
}

TEST_CASE("degree queries")
{
    auto s = star(5);
    CHECK(min_degree(s) == 1);
    CHECK(max_degree(s) == 4);
    CHECK_THROWS_AS(min_degree(Graph()), GraphError);
    CHECK_THROWS_AS(max_degree(Graph()), GraphError);
    CHECK(leaves(s) == VertexSet{1, 2, 3, 4});
    CHECK(supports(s) == VertexSet{0});
    CHECK(leaves(path(2)) == VertexSet{0, 1});
    CHECK(supports(path(2)) == VertexSet{0, 1});
}

TEST_CASE("isolated vertices and connectivity")
{
    Graph g(4, {{0, 1}});
    CHECK(g.has_isolated_vertex());
    CHECK(isolated_vertices(g) == VertexSet{2, 3});
    CHECK_FALSE(g.is_connected());
    CHECK(cycle(5).is_connected());
    CHECK_FALSE(cycle(5).has_isolated_vertex());
    CHECK(Graph(1).has_isolated_vertex());
}

TEST_CASE("2-packings")
{
    CHECK(is_2packing(cycle(6), {0, 3}));
    CHECK_FALSE(is_2packing(cycle(6), {0, 2}));
    CHECK(is_2packing(cycle(6), {}));
    CHECK_THROWS_AS(is_2packing(cycle(6), {7}), GraphError);
}

TEST_CASE("edge removal and induced subgraphs")
{
    auto c = cycle(6);
    auto p = c.without_edges({{0, 5}});
    CHECK(p == path(6));
    CHECK_THROWS_AS(c.without_edges({{0, 3}}), GraphError);

    auto sub = cycle(5).induced({0, 1, 2});
    CHECK(sub == path(3));
    CHECK_THROWS_AS(cycle(5).induced({9}), GraphError);
}

TEST_CASE("describe")
{
    CHECK(describe(path(3)) == "n=3: 0-1 1-2");
}
