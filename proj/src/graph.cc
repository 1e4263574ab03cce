#include <wdom/graph.hh>

#include <algorithm>
#include <sstream>

using std::string;
using std::vector;

namespace wdom
{
    Graph::Graph(int n)
    {
        if (n < 0)
            throw GraphError("negative vertex count " + std::to_string(n));
        adj_.resize(n);
    }

    Graph::Graph(int n, const vector<Edge> & edges) :
        Graph(n)
    {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for n=" + std::to_string(n));
            if (u == v)
                throw GraphError("loop at vertex " + std::to_string(u));
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }

        edge_count_ = 0;
        for (auto & row : adj_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            edge_count_ += row.size();
        }
        edge_count_ /= 2;
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        const auto & row = adj_.at(u);
        return std::binary_search(row.begin(), row.end(), v);
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u)
            for (auto v : adj_[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::has_isolated_vertex() const -> bool
    {
        return std::any_of(adj_.begin(), adj_.end(), [](const auto & row) { return row.empty(); });
    }

    auto Graph::is_connected() const -> bool
    {
        if (order() == 0)
            return true;

        vector<char> seen(order(), 0);
        vector<Vertex> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto u : adj_[v])
                if (! seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        return reached == order();
    }

    auto Graph::without_edges(const vector<Edge> & removed) const -> Graph
    {
        auto kept = edges();
        for (auto [u, v] : removed) {
            Edge e{std::min(u, v), std::max(u, v)};
            auto it = std::find(kept.begin(), kept.end(), e);
            if (it == kept.end())
                throw GraphError("cannot remove missing edge " + std::to_string(u) + "-" + std::to_string(v));
            kept.erase(it);
        }
        return Graph(order(), kept);
    }

    auto Graph::induced(const VertexSet & kept) const -> Graph
    {
        vector<int> index(order(), -1);
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (kept[i] < 0 || kept[i] >= order())
                throw GraphError("induced: vertex " + std::to_string(kept[i]) + " out of range");
            index[kept[i]] = static_cast<int>(i);
        }

        vector<Edge> sub;
        for (auto [u, v] : edges())
            if (index[u] >= 0 && index[v] >= 0)
                sub.emplace_back(index[u], index[v]);
        return Graph(static_cast<int>(kept.size()), sub);
    }

    auto min_degree(const Graph & g) -> int
    {
        if (g.order() == 0)
            throw GraphError("minimum degree of the empty graph");
        int result = g.degree(0);
        for (Vertex v = 1; v < g.order(); ++v)
            result = std::min(result, g.degree(v));
        return result;
    }

    auto max_degree(const Graph & g) -> int
    {
        if (g.order() == 0)
            throw GraphError("maximum degree of the empty graph");
        int result = g.degree(0);
        for (Vertex v = 1; v < g.order(); ++v)
            result = std::max(result, g.degree(v));
        return result;
    }

    auto leaves(const Graph & g) -> VertexSet
    {
        VertexSet result;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) == 1)
                result.push_back(v);
        return result;
    }

    auto supports(const Graph & g) -> VertexSet
    {
        VertexSet result;
        for (Vertex v = 0; v < g.order(); ++v) {
            const auto & nbrs = g.neighbours(v);
            if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return g.degree(u) == 1; }))
                result.push_back(v);
        }
        return result;
    }

    auto is_2packing(const Graph & g, const VertexSet & s) -> bool
    {
        vector<char> covered(g.order(), 0);
        for (auto v : s) {
            if (v < 0 || v >= g.order())
                throw GraphError("is_2packing: vertex " + std::to_string(v) + " out of range");
            if (covered[v])
                return false;
            covered[v] = 1;
            for (auto u : g.neighbours(v)) {
                if (covered[u])
                    return false;
                covered[u] = 1;
            }
        }
        return true;
    }

    auto isolated_vertices(const Graph & g) -> VertexSet
    {
        VertexSet result;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) == 0)
                result.push_back(v);
        return result;
    }

    auto describe(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "n=" << g.order() << ":";
        for (auto [u, v] : g.edges())
            out << " " << u << "-" << v;
        return out.str();
    }
}
