#pragma once

#include <wdom/graph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wdom
{
    /// P_n with edges i-(i+1).
    auto path(int n) -> Graph;

    /// C_n with edges i-(i+1) and (n-1)-0; n >= 3.
    auto cycle(int n) -> Graph;

    auto complete(int n) -> Graph;

    /// K_{1,n-1} with centre 0; n >= 1.
    auto star(int n) -> Graph;

    auto empty_graph(int n) -> Graph;

    /// Vertices of h follow those of g.
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

    /// G ∘ H. Vertex (u, v) has index u * |V(H)| + v, so the copy H_u occupies the
    /// contiguous block [u * |V(H)|, (u + 1) * |V(H)|).
    auto lexicographic_product(const Graph & g, const Graph & h) -> Graph;

    /// Index of (u, v) in lexicographic_product(g, h) where |V(H)| = h_order.
    inline auto product_vertex(int u, int v, int h_order) -> Vertex { return u * h_order + v; }

    /// G1 ⊙ G2. Vertices 0..|V(G1)|-1 are G1; the private copy of G2 attached to
    /// x occupies [n1 + x * n2, n1 + (x + 1) * n2).
    auto corona(const Graph & g1, const Graph & g2) -> Graph;

    /// G_{k,r}: K_k on 0..k-1, then for each pair {x, y} (lexicographic) r
    /// independent vertices joined to exactly x and y.
    auto family_hk(int k, int r) -> Graph;

    /// K_{1,r} with one edge subdivided once: centre 0, leaves 1..r-1, the
    /// subdivision vertex r and its leaf r+1. Requires r >= 3.
    auto subdivided_star(int r) -> Graph;

    /// A labelled function drawn in a figure, kept with the fixture so that a
    /// transcription error in the edge list is caught by validation.
    struct FixtureWitness
    {
        std::vector<int> vector;
        std::vector<int> labels;
        int weight;
    };

    struct Fixture
    {
        std::string name;
        Graph graph;
        std::vector<std::string> vertex_names;
        std::vector<FixtureWitness> witnesses;
    };

    /// Names: fig1_g1, fig1_g2, fig1_g3, fig2, fig3, subdivided_star:R (also
    /// accepted as subdivided_star(R)). Throws GraphError on unknown names.
    ///
    /// fig1_g1 and fig1_g3 are read off drawings; if a quoted value disagrees
    /// with an exact solve, suspect the transcription here first.
    auto fixture_data(const std::string & name) -> Fixture;

    auto fixture(const std::string & name) -> Graph;

    auto fixture_names() -> std::vector<std::string>;

    inline constexpr int default_enumeration_cap = 7;

    struct EnumerationFilter
    {
        bool connected_only = false;
        int min_degree_at_least = 0;
    };

    /// Streams every labelled simple graph on n vertices passing the filter, in
    /// increasing edge-mask order. Bit k of the mask is the k-th pair of the
    /// graph6 ordering (column-major upper triangle).
    class LabeledGraphEnumerator
    {
    public:
        LabeledGraphEnumerator(int n, EnumerationFilter filter = {}, int cap = default_enumeration_cap);

        auto next() -> std::optional<Graph>;

    private:
        int n_;
        EnumerationFilter filter_;
        std::vector<Edge> pairs_;
        std::uint64_t mask_ = 0, end_ = 0;
    };

    auto enumerate_labeled_graphs(int n, EnumerationFilter filter = {}, int cap = default_enumeration_cap) -> std::vector<Graph>;
}
