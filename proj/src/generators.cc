#include <wdom/generators.hh>

#include <algorithm>
#include <limits>

using std::optional;
using std::string;
using std::vector;

namespace wdom
{
    namespace
    {
        auto checked_order(long long n, const char * what) -> int
        {
            if (n > std::numeric_limits<int>::max() / 2)
                throw GraphError(string(what) + ": order " + std::to_string(n) + " overflows the vertex index type");
            return static_cast<int>(n);
        }

        auto require_nonnegative(int n, const char * what) -> void
        {
            if (n < 0)
                throw GraphError(string(what) + ": negative order " + std::to_string(n));
        }
    }

    auto path(int n) -> Graph
    {
        require_nonnegative(n, "path");
        vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph(n, edges);
    }

    auto cycle(int n) -> Graph
    {
        if (n < 3)
            throw GraphError("cycle: order must be at least 3, got " + std::to_string(n));
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph(n, edges);
    }

    auto complete(int n) -> Graph
    {
        require_nonnegative(n, "complete");
        vector<Edge> edges;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                edges.emplace_back(i, j);
        return Graph(n, edges);
    }

    auto star(int n) -> Graph
    {
        if (n < 1)
            throw GraphError("star: order must be at least 1, got " + std::to_string(n));
        vector<Edge> edges;
        for (int i = 1; i < n; ++i)
            edges.emplace_back(0, i);
        return Graph(n, edges);
    }

    auto empty_graph(int n) -> Graph
    {
        require_nonnegative(n, "empty_graph");
        return Graph(n);
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        int n = checked_order(static_cast<long long>(g.order()) + h.order(), "disjoint_union");
        auto edges = g.edges();
        for (auto [u, v] : h.edges())
            edges.emplace_back(u + g.order(), v + g.order());
        return Graph(n, edges);
    }

    auto lexicographic_product(const Graph & g, const Graph & h) -> Graph
    {
        int nh = h.order();
        int n = checked_order(static_cast<long long>(g.order()) * nh, "lexicographic_product");

        vector<Edge> edges;
        for (auto [u, x] : g.edges())
            for (int v = 0; v < nh; ++v)
                for (int y = 0; y < nh; ++y)
                    edges.emplace_back(product_vertex(u, v, nh), product_vertex(x, y, nh));
        for (int u = 0; u < g.order(); ++u)
            for (auto [v, y] : h.edges())
                edges.emplace_back(product_vertex(u, v, nh), product_vertex(u, y, nh));
        return Graph(n, edges);
    }

    auto corona(const Graph & g1, const Graph & g2) -> Graph
    {
        long long n1 = g1.order(), n2 = g2.order();
        int n = checked_order(n1 * (1 + n2), "corona");

        auto edges = g1.edges();
        for (int x = 0; x < n1; ++x) {
            int base = static_cast<int>(n1 + x * n2);
            for (int y = 0; y < n2; ++y)
                edges.emplace_back(x, base + y);
            for (auto [a, b] : g2.edges())
                edges.emplace_back(base + a, base + b);
        }
        return Graph(n, edges);
    }

    auto family_hk(int k, int r) -> Graph
    {
        if (k < 3 || r < 1)
            throw GraphError("family_hk: need k >= 3 and r >= 1, got k=" + std::to_string(k) + " r=" + std::to_string(r));

        int n = checked_order(k + static_cast<long long>(r) * k * (k - 1) / 2, "family_hk");
        auto edges = complete(k).edges();
        int next = k;
        for (int x = 0; x < k; ++x)
            for (int y = x + 1; y < k; ++y)
                for (int i = 0; i < r; ++i, ++next) {
                    edges.emplace_back(x, next);
                    edges.emplace_back(y, next);
                }
        return Graph(n, edges);
    }

    auto subdivided_star(int r) -> Graph
    {
        if (r < 3)
            throw GraphError("subdivided_star: need r >= 3, got " + std::to_string(r));
        vector<Edge> edges;
        for (int i = 1; i < r; ++i)
            edges.emplace_back(0, i);
        edges.emplace_back(0, r);
        edges.emplace_back(r, r + 1);
        return Graph(r + 2, edges);
    }

    namespace
    {
        auto letters(int n) -> vector<string>
        {
            vector<string> names;
            for (int i = 0; i < n; ++i)
                names.emplace_back(1, static_cast<char>('A' + i));
            return names;
        }

        auto parse_subdivided_star(const string & name) -> optional<int>
        {
            for (const string prefix : {"subdivided_star:", "subdivided_star("}) {
                if (name.rfind(prefix, 0) != 0)
                    continue;
                auto arg = name.substr(prefix.size());
                if (prefix.back() == '(') {
                    if (arg.empty() || arg.back() != ')')
                        return std::nullopt;
                    arg.pop_back();
                }
                if (arg.empty() || ! std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; }) || arg.size() > 6)
                    return std::nullopt;
                return std::stoi(arg);
            }
            return std::nullopt;
        }
    }

    auto fixture_data(const string & name) -> Fixture
    {
        if (name == "fig1_g1") {
            // C_8 on A..H with chords B-D and F-H.
            enum { A, B, C, D, E, F, G, H };
            Graph g(8, {{A, B}, {B, C}, {C, D}, {D, E}, {E, F}, {F, G}, {G, H}, {H, A}, {B, D}, {F, H}});
            return {name, g, letters(8), {{{2, 1, 0}, {0, 1, 0, 1, 0, 1, 0, 1}, 4}}};
        }

        if (name == "fig1_g2") {
            auto g = family_hk(3, 1);
            return {name, g, {"K0", "K1", "K2", "x01", "x02", "x12"}, {{{2, 2, 0}, {1, 1, 1, 0, 0, 0}, 3}}};
        }

        if (name == "fig1_g3") {
            // Outer C_8 on A..H; inner I, J, K, L.
            enum { A, B, C, D, E, F, G, H, I, J, K, L };
            Graph g(12, {{A, B}, {B, C}, {C, D}, {D, E}, {E, F}, {F, G}, {G, H}, {H, A},
                            {I, A}, {I, B}, {I, J}, {J, G}, {J, H},
                            {K, C}, {K, D}, {K, L}, {L, E}, {L, F}});
            return {name, g, letters(12), {{{2, 2, 2}, {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2}, 8}}};
        }

        if (name == "fig2") {
            enum { A, B, C, D, E, F, G, H, I, J };
            Graph g(10, {{E, A}, {F, A}, {A, B}, {B, G}, {B, H}, {G, C}, {H, C}, {C, D}, {D, I}, {D, J}});
            vector<int> left{2, 1, 1, 2, 0, 0, 0, 0, 0, 0};
            vector<int> right{2, 0, 2, 2, 0, 0, 0, 0, 0, 0};
            return {name, g, letters(10), {{{2, 2, 0}, left, 6}, {{2, 2, 1}, left, 6}, {{2, 2, 0}, right, 6}}};
        }

        if (name == "fig3") {
            // Path v1..v7 (0..6); three pendant leaves on each of v1, v4, v7.
            vector<Edge> edges;
            for (int i = 0; i + 1 < 7; ++i)
                edges.emplace_back(i, i + 1);
            int next = 7;
            for (int hub : {0, 3, 6})
                for (int i = 0; i < 3; ++i)
                    edges.emplace_back(hub, next++);
            Graph g(16, edges);

            vector<string> names;
            for (int i = 1; i <= 16; ++i)
                names.push_back("v" + std::to_string(i));

            vector<int> f221(16, 0), f2220(16, 0);
            for (int hub : {0, 3, 6}) {
                f221[hub] = 2;
                f2220[hub] = 3;
            }
            f221[1] = f221[2] = f221[5] = 1;
            return {name, g, names, {{{2, 2, 1}, f221, 9}, {{2, 2, 2, 0}, f2220, 9}}};
        }

        if (auto r = parse_subdivided_star(name)) {
            auto g = subdivided_star(*r);
            vector<string> names{"c"};
            for (int i = 1; i < *r; ++i)
                names.push_back("l" + std::to_string(i));
            names.push_back("s");
            names.push_back("t");
            return {name, g, names, {}};
        }

        throw GraphError("unknown fixture '" + name + "'");
    }

    auto fixture(const string & name) -> Graph
    {
        return fixture_data(name).graph;
    }

    auto fixture_names() -> vector<string>
    {
        return {"fig1_g1", "fig1_g2", "fig1_g3", "fig2", "fig3", "subdivided_star:3"};
    }

    LabeledGraphEnumerator::LabeledGraphEnumerator(int n, EnumerationFilter filter, int cap) :
        n_(n),
        filter_(filter)
    {
        if (n < 0)
            throw GraphError("enumerate: negative order");
        if (n > cap)
            throw GraphError("enumerate: order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
        if (n > 11)
            throw GraphError("enumerate: order " + std::to_string(n) + " exceeds the 64-bit edge mask");

        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                pairs_.emplace_back(i, j);
        end_ = std::uint64_t{1} << pairs_.size();
    }

    auto LabeledGraphEnumerator::next() -> optional<Graph>
    {
        while (mask_ < end_) {
            auto mask = mask_++;
            vector<Edge> edges;
            for (std::size_t k = 0; k < pairs_.size(); ++k)
                if ((mask >> k) & 1)
                    edges.push_back(pairs_[k]);
            Graph g(n_, edges);

            if (filter_.connected_only && ! g.is_connected())
                continue;
            if (filter_.min_degree_at_least > 0 && (n_ == 0 || min_degree(g) < filter_.min_degree_at_least))
                continue;
            return g;
        }
        return std::nullopt;
    }

    auto enumerate_labeled_graphs(int n, EnumerationFilter filter, int cap) -> vector<Graph>
    {
        LabeledGraphEnumerator e(n, filter, cap);
        vector<Graph> result;
        while (auto g = e.next())
            result.push_back(std::move(*g));
        return result;
    }
}
