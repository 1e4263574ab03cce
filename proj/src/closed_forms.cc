#include <wdom/closed_forms.hh>

#include <stdexcept>

using std::optional;
using std::string;
using std::vector;

namespace wdom::closed_forms
{
    namespace
    {
        auto require_order(int n, const char * what) -> void
        {
            if (n < 3)
                throw std::domain_error(string(what) + ": n must be at least 3, got " + std::to_string(n));
        }

        auto value_of(const Graph & g, const WeightVector & w) -> int
        {
            auto v = gamma_value(g, w);
            if (! v)
                throw std::logic_error("bound evaluation: " + w.to_string() + " infeasible on " + describe(g));
            return *v;
        }
    }

    auto to_string(Family f) -> string
    {
        return f == Family::path ? "path" : "cycle";
    }

    auto gamma_t_path(int n) -> int
    {
        require_order(n, "gamma_t_path");
        switch (n % 4) {
        case 0: return n / 2;
        case 2: return n / 2 + 1;
        default: return (n + 1) / 2;
        }
    }

    auto gamma_222_path(int n) -> int
    {
        require_order(n, "gamma_222_path");
        return 2 * gamma_t_path(n);
    }

    auto gamma_222_cycle(int n) -> int
    {
        require_order(n, "gamma_222_cycle");
        return n;
    }

    auto gamma_221_path(int n) -> int
    {
        require_order(n, "gamma_221_path");
        int r = n % 7;
        return n - n / 7 + (r == 1 || r == 2 ? 1 : 0);
    }

    auto gamma_221_cycle(int n) -> int
    {
        require_order(n, "gamma_221_cycle");
        int r = n % 7;
        return n - n / 7 + (r == 1 || r == 2 ? 1 : 0);
    }

    auto gamma_220_path(int n) -> int
    {
        require_order(n, "gamma_220_path");
        return 2 * static_cast<int>(ceil_div(n, 3));
    }

    auto gamma_220_cycle(int n) -> int
    {
        require_order(n, "gamma_220_cycle");
        return 2 * static_cast<int>(ceil_div(n, 3));
    }

    auto gamma_210_path(int n) -> int
    {
        require_order(n, "gamma_210_path");
        return 2 * static_cast<int>(ceil_div(n, 3));
    }

    auto gamma_210_cycle(int n) -> int
    {
        require_order(n, "gamma_210_cycle");
        return static_cast<int>(ceil_div(2LL * n, 3));
    }

    auto gamma_2220_path(int n) -> int
    {
        require_order(n, "gamma_2220_path");
        return n == 5 ? 6 : n;
    }

    auto gamma_2220_cycle(int n) -> int
    {
        require_order(n, "gamma_2220_cycle");
        return n;
    }

    auto closed_form(Family family, const WeightVector & w, int n) -> optional<FormulaResult>
    {
        using Fn = int (*)(int);
        struct Entry
        {
            WeightVector w;
            Fn path, cycle;
            const char * path_id;
            const char * cycle_id;
        };
        static const vector<Entry> table{
            {{1, 1}, gamma_t_path, nullptr, "gamma_t_path", nullptr},
            {{2, 2, 2}, gamma_222_path, gamma_222_cycle, "gamma_222_path", "gamma_222_cycle"},
            {{2, 2, 1}, gamma_221_path, gamma_221_cycle, "gamma_221_path", "gamma_221_cycle"},
            {{2, 2, 0}, gamma_220_path, gamma_220_cycle, "gamma_220_path", "gamma_220_cycle"},
            {{2, 1, 0}, gamma_210_path, gamma_210_cycle, "gamma_210_path", "gamma_210_cycle"},
            {{2, 2, 2, 0}, gamma_2220_path, gamma_2220_cycle, "gamma_2220_path", "gamma_2220_cycle"},
        };

        for (const auto & e : table) {
            if (e.w != w)
                continue;
            Fn fn = family == Family::path ? e.path : e.cycle;
            if (! fn)
                return std::nullopt;
            return FormulaResult{fn(n), family == Family::path ? e.path_id : e.cycle_id};
        }
        return std::nullopt;
    }

    auto formula_vectors(Family family) -> vector<WeightVector>
    {
        vector<WeightVector> result;
        if (family == Family::path)
            result.push_back({1, 1});
        for (auto w : {WeightVector{2, 2, 2}, WeightVector{2, 2, 1}, WeightVector{2, 2, 0}, WeightVector{2, 1, 0}, WeightVector{2, 2, 2, 0}})
            result.push_back(w);
        return result;
    }

    auto to_string(LowerBoundClause c) -> string
    {
        switch (c) {
        case LowerBoundClause::i: return "i";
        case LowerBoundClause::ii: return "ii";
        case LowerBoundClause::iii: return "iii";
        case LowerBoundClause::iv: return "iv";
        }
        return "?";
    }

    auto lower_bound(const Graph & g, const WeightVector & w, LowerBoundClause which) -> optional<int>
    {
        int n = g.order();
        if (n == 0 || g.has_isolated_vertex())
            return std::nullopt;

        int l = w.max_label(), delta = min_degree(g), big = max_degree(g);
        const auto & e = w.entries();

        switch (which) {
        case LowerBoundClause::i: {
            int k = e[l] + 1;
            for (int i = 0; i <= l; ++i)
                if (e[i] != k + l - 1 - i)
                    return std::nullopt;
            if (k > l * delta + 1)
                return std::nullopt;
            return static_cast<int>(ceil_div(static_cast<long long>(k + l - 1) * n, big + 1));
        }
        case LowerBoundClause::ii: {
            int k = e[0];
            for (int x : e)
                if (x != k)
                    return std::nullopt;
            if (k > l * delta)
                return std::nullopt;
            return static_cast<int>(ceil_div(static_cast<long long>(k) * n, big));
        }
        case LowerBoundClause::iii: {
            int k = e[0];
            for (int i = 1; i <= l; ++i)
                if (e[i] != k - 1)
                    return std::nullopt;
            if (k > l * delta + 1)
                return std::nullopt;
            return static_cast<int>(ceil_div(static_cast<long long>(k) * n, big + 1));
        }
        case LowerBoundClause::iv:
            if (! w.is_monotone() || e[l] > l * delta)
                return std::nullopt;
            return static_cast<int>(ceil_div(static_cast<long long>(e[0]) * n, big + e[0]));
        }
        return std::nullopt;
    }

    auto lower_bound_suite(const Graph & g, const WeightVector & w) -> vector<NamedBound>
    {
        vector<NamedBound> result;
        if (g.order() == 0 || g.has_isolated_vertex())
            return result;

        for (auto c : {LowerBoundClause::i, LowerBoundClause::ii, LowerBoundClause::iii, LowerBoundClause::iv})
            if (auto v = lower_bound(g, w, c))
                result.push_back({"degree_clause_" + to_string(c), *v});

        long long n = g.order(), big = max_degree(g);
        if (w == WeightVector{2, 2, 2})
            result.push_back({"ceil(2n/D)", static_cast<int>(ceil_div(2 * n, big))});
        else if (w == WeightVector{2, 2, 1}) {
            int gt = value_of(g, {1, 1});
            result.push_back({"ceil((2n+gamma_t)/(D+1))", static_cast<int>(ceil_div(2 * n + gt, big + 1))});
        } else if (w == WeightVector{2, 2, 0} || w == WeightVector{2, 1, 0})
            result.push_back({"ceil(2n/(D+1))", static_cast<int>(ceil_div(2 * n, big + 1))});
        else if (w == WeightVector{2, 2, 2, 0})
            result.push_back({"gamma_221", value_of(g, {2, 2, 1})});
        return result;
    }

    auto upper_bound_suite(const Graph & g, const WeightVector & w) -> vector<NamedBound>
    {
        vector<NamedBound> result;
        if (g.order() == 0 || g.has_isolated_vertex())
            return result;

        bool min_degree_two = min_degree(g) >= 2;
        auto gamma = [&] { return value_of(g, {1, 0}); };
        auto gamma_t = [&] { return value_of(g, {1, 1}); };
        auto gamma_x2t = [&] { return value_of(g, {2, 2}); };

        if (w == WeightVector{2, 2, 2}) {
            result.push_back({"2*gamma_t", 2 * gamma_t()});
            if (min_degree_two)
                result.push_back({"gamma_x2t", gamma_x2t()});
        } else if (w == WeightVector{2, 2, 1}) {
            result.push_back({"3*gamma", 3 * gamma()});
            result.push_back({"2*gamma_t", 2 * gamma_t()});
            if (min_degree_two)
                result.push_back({"gamma_x2t", gamma_x2t()});
        } else if (w == WeightVector{2, 2, 0}) {
            result.push_back({"2*gamma", 2 * gamma()});
            if (min_degree_two)
                result.push_back({"gamma_x2t", gamma_x2t()});
        } else if (w == WeightVector{2, 1, 0}) {
            int v = value_of(g, {2, 1}) - static_cast<int>(leaves(g).size()) + static_cast<int>(supports(g).size());
            result.push_back({"gamma_x2-|L|+|S|", v});
            result.push_back({"2*gamma", 2 * gamma()});
        } else if (w == WeightVector{2, 2, 2, 0}) {
            result.push_back({"3*gamma", 3 * gamma()});
            result.push_back({"gamma_222", value_of(g, {2, 2, 2})});
        }
        return result;
    }

    auto dichotomy_applies(int n, int max_deg, int gamma_t) -> bool
    {
        return 2LL * gamma_t * max_deg + gamma_t < 2LL * n + 2LL * max_deg + 2;
    }

    auto dichotomy_221(const Graph & g) -> optional<std::pair<int, int>>
    {
        if (g.order() == 0 || g.has_isolated_vertex())
            return std::nullopt;
        int n = g.order(), big = max_degree(g), gt = value_of(g, {1, 1});
        if (! dichotomy_applies(n, big, gt))
            return std::nullopt;
        return std::pair{2 * gt, static_cast<int>(ceil_div(2LL * n + gt, big + 1))};
    }
}
