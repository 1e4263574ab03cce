#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wdom
{
    class GraphError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    using Vertex = int;

    /// Sorted set of vertex indices. Membership is checked against a graph by the
    /// functions that consume it, never by the container itself.
    using VertexSet = std::vector<Vertex>;

    using Edge = std::pair<Vertex, Vertex>;

    /// Immutable simple undirected graph on vertices 0..n-1.
    ///
    /// Adjacency lists are sorted and duplicate-free; the constructor rejects loops
    /// and out-of-range endpoints, so symmetry and irreflexivity hold for every
    /// instance that exists.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);
        Graph(int n, const std::vector<Edge> & edges);

        auto order() const -> int { return static_cast<int>(adj_.size()); }
        auto size() const -> std::size_t { return edge_count_; }

        auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return adj_.at(v); }
        auto degree(Vertex v) const -> int { return static_cast<int>(adj_.at(v).size()); }
        auto adjacent(Vertex u, Vertex v) const -> bool;

        /// Edges as (u, v) pairs with u < v, sorted.
        auto edges() const -> std::vector<Edge>;

        auto has_isolated_vertex() const -> bool;
        auto is_connected() const -> bool;

        /// Copy of this graph with the given edges removed. Every edge must exist.
        auto without_edges(const std::vector<Edge> & removed) const -> Graph;

        /// Induced subgraph on the kept vertices, relabelled in increasing order.
        auto induced(const VertexSet & kept) const -> Graph;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        std::vector<std::vector<Vertex>> adj_;
        std::size_t edge_count_ = 0;
    };

    /// δ(G); throws GraphError on the empty graph.
    auto min_degree(const Graph & g) -> int;

    /// Δ(G); throws GraphError on the empty graph.
    auto max_degree(const Graph & g) -> int;

    /// Vertices of degree one.
    auto leaves(const Graph & g) -> VertexSet;

    /// Vertices adjacent to at least one leaf.
    auto supports(const Graph & g) -> VertexSet;

    /// True iff closed neighbourhoods of distinct members are pairwise disjoint.
    auto is_2packing(const Graph & g, const VertexSet & s) -> bool;

    auto isolated_vertices(const Graph & g) -> VertexSet;

    /// Short human-readable edge list, "n=4: 0-1 1-2 2-3".
    auto describe(const Graph & g) -> std::string;
}
