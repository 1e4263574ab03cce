#include <wdom/solver.hh>

#include "search.hh"

#include <algorithm>
#include <charconv>
#include <sstream>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace wdom
{
    WeightVector::WeightVector(vector<int> entries) :
        entries_(std::move(entries))
    {
        if (entries_.size() < 2)
            throw WeightVectorError("weight vector needs at least two entries");
        if (entries_[0] < 1)
            throw WeightVectorError("weight vector needs w_0 >= 1");
        if (std::any_of(entries_.begin(), entries_.end(), [](int x) { return x < 0; }))
            throw WeightVectorError("weight vector entries must be nonnegative");
    }

    WeightVector::WeightVector(std::initializer_list<int> entries) :
        WeightVector(vector<int>(entries))
    {
    }

    auto WeightVector::parse(string_view text) -> WeightVector
    {
        string cleaned;
        for (char c : text)
            if (c != ' ' && c != '(' && c != ')')
                cleaned.push_back(c);

        vector<int> entries;
        std::size_t start = 0;
        while (start <= cleaned.size()) {
            auto end = cleaned.find(',', start);
            if (end == string::npos)
                end = cleaned.size();
            auto token = string_view(cleaned).substr(start, end - start);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
                throw WeightVectorError("cannot parse weight vector '" + string(text) + "'");
            entries.push_back(value);
            start = end + 1;
        }
        return WeightVector(std::move(entries));
    }

    auto WeightVector::is_monotone() const -> bool
    {
        return std::is_sorted(entries_.rbegin(), entries_.rend());
    }

    auto WeightVector::min_requirement() const -> int
    {
        return *std::min_element(entries_.begin(), entries_.end());
    }

    auto WeightVector::precedes(const WeightVector & other) const -> bool
    {
        if (entries_.size() != other.entries_.size())
            return false;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] > other.entries_[i])
                return false;
        return true;
    }

    auto WeightVector::to_string() const -> string
    {
        string out = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(entries_[i]);
        }
        return out + ")";
    }

    auto LabelFunction::level_size(int i) const -> int
    {
        return static_cast<int>(std::count(labels_.begin(), labels_.end(), i));
    }

    auto LabelFunction::level_set(int i) const -> VertexSet
    {
        VertexSet result;
        for (int v = 0; v < size(); ++v)
            if (labels_[v] == i)
                result.push_back(v);
        return result;
    }

    auto LabelFunction::sum_over(const VertexSet & s) const -> int
    {
        int total = 0;
        for (auto v : s)
            total += labels_.at(v);
        return total;
    }

    auto LabelFunction::neighbourhood_sum(const Graph & g, Vertex v) const -> int
    {
        return sum_over(g.neighbours(v));
    }

    auto weight(const LabelFunction & f) -> int
    {
        int total = 0;
        for (auto x : f.labels())
            total += x;
        return total;
    }

    auto validate(const Graph & g, const WeightVector & w, const LabelFunction & f) -> bool
    {
        if (f.size() != g.order())
            throw WeightVectorError("labelling has " + std::to_string(f.size()) + " entries for a graph of order " + std::to_string(g.order()));
        for (auto x : f.labels())
            if (x < 0 || x > w.max_label())
                throw WeightVectorError("label " + std::to_string(x) + " outside 0.." + std::to_string(w.max_label()));

        for (Vertex v = 0; v < g.order(); ++v)
            if (f.neighbourhood_sum(g, v) < w[f[v]])
                return false;
        return true;
    }

    auto to_string(Method m) -> string
    {
        switch (m) {
        case Method::oracle: return "oracle";
        case Method::branch_and_bound: return "branch_and_bound";
        case Method::closed_form: return "closed_form";
        }
        return "unknown";
    }

    namespace
    {
        auto labelling_count_within(int n, int l, std::uint64_t budget) -> bool
        {
            std::uint64_t count = 1;
            for (int i = 0; i < n; ++i) {
                if (count > budget / static_cast<std::uint64_t>(l + 1))
                    return false;
                count *= static_cast<std::uint64_t>(l + 1);
            }
            return count <= budget;
        }

        auto require_budget(const Graph & g, const WeightVector & w, std::uint64_t budget) -> void
        {
            if (! labelling_count_within(g.order(), w.max_label(), budget))
                throw BudgetExceeded(std::to_string(w.max_label() + 1) + "^" + std::to_string(g.order()) + " labellings exceed the budget of " + std::to_string(budget));
        }
    }

    auto exists_w_dominating(const Graph & g, const WeightVector & w) -> bool
    {
        if (g.order() == 0)
            return true;
        if (w.is_monotone())
            return w[w.max_label()] <= w.max_label() * min_degree(g);
        return gamma_w(g, w).has_value();
    }

    auto gamma_w_bruteforce(const Graph & g, const WeightVector & w, std::uint64_t budget) -> optional<SolveResult>
    {
        require_budget(g, w, budget);

        int n = g.order(), l = w.max_label();
        vector<int> labels(n, 0);
        optional<vector<int>> best;
        int best_weight = 0;
        std::uint64_t visited = 0;

        while (true) {
            ++visited;
            int total = 0;
            for (auto x : labels)
                total += x;
            if (! best || total < best_weight) {
                bool ok = true;
                for (Vertex v = 0; v < n && ok; ++v) {
                    int s = 0;
                    for (auto u : g.neighbours(v))
                        s += labels[u];
                    ok = s >= w[labels[v]];
                }
                if (ok) {
                    best = labels;
                    best_weight = total;
                }
            }

            int pos = n - 1;
            while (pos >= 0 && labels[pos] == l)
                labels[pos--] = 0;
            if (pos < 0)
                break;
            ++labels[pos];
        }

        if (! best)
            return std::nullopt;
        return SolveResult{best_weight, LabelFunction(*best), visited, Method::oracle, w};
    }

    auto gamma_w(const Graph & g, const WeightVector & w) -> optional<SolveResult>
    {
        detail::Search search(g, w);
        auto best = search.minimise(w.max_label() * g.order() + 1);
        if (! best)
            return std::nullopt;
        LabelFunction f(std::move(*best));
        int value = weight(f);
        return SolveResult{value, std::move(f), search.nodes(), Method::branch_and_bound, w};
    }

    auto gamma_value(const Graph & g, const WeightVector & w) -> optional<int>
    {
        if (auto r = gamma_w(g, w))
            return r->value;
        return std::nullopt;
    }

    auto for_each_optimal(const Graph & g, const WeightVector & w, const std::function<bool(const LabelFunction &)> & visit,
        std::uint64_t budget) -> void
    {
        require_budget(g, w, budget);
        auto value = gamma_value(g, w);
        if (! value)
            return;

        detail::Search search(g, w);
        std::function<bool(const vector<int> &)> adapter = [&](const vector<int> & labels) {
            return visit(LabelFunction(labels));
        };
        search.enumerate(*value, adapter);
    }

    auto enumerate_optimal(const Graph & g, const WeightVector & w, std::uint64_t budget) -> vector<LabelFunction>
    {
        vector<LabelFunction> result;
        for_each_optimal(
            g, w, [&](const LabelFunction & f) {
                result.push_back(f);
                return true;
            },
            budget);
        return result;
    }

    auto nu_w(const Graph & g, const WeightVector & w) -> optional<int>
    {
        auto value = gamma_value(g, w);
        if (! value)
            return std::nullopt;
        detail::Search search(g, w);
        auto best = search.max_zeros(*value);
        if (! best)
            throw std::logic_error("nu_w: no optimal function found at the optimum");
        return static_cast<int>(std::count(best->begin(), best->end(), 0));
    }

    auto DominationKind::vector() const -> WeightVector
    {
        if (k < 1)
            throw WeightVectorError("domination kind needs k >= 1");
        switch (tag) {
        case Tag::gamma: return {1, 0};
        case Tag::gamma_t: return {1, 1};
        case Tag::gamma_k: return {k, 0};
        case Tag::gamma_times_k: return {k, k - 1};
        case Tag::gamma_times_k_t: return {k, k};
        case Tag::gamma_italian: return {2, 0, 0};
        case Tag::gamma_total_italian: return {2, 1, 1};
        case Tag::gamma_brace_k: {
            std::vector<int> entries;
            for (int i = k; i >= 0; --i)
                entries.push_back(i);
            return WeightVector(entries);
        }
        }
        throw std::logic_error("unhandled domination kind");
    }

    auto DominationKind::parse(string_view text) -> DominationKind
    {
        auto colon = text.find(':');
        auto name = text.substr(0, colon);
        int k = 1;
        if (colon != string_view::npos) {
            auto arg = text.substr(colon + 1);
            auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
            if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size() || k < 1)
                throw WeightVectorError("bad parameter in domination kind '" + string(text) + "'");
        }

        bool takes_k = true;
        Tag tag;
        if (name == "gamma")
            tag = Tag::gamma, takes_k = false;
        else if (name == "gamma_t")
            tag = Tag::gamma_t, takes_k = false;
        else if (name == "gamma_I")
            tag = Tag::gamma_italian, takes_k = false;
        else if (name == "gamma_tI")
            tag = Tag::gamma_total_italian, takes_k = false;
        else if (name == "gamma_k")
            tag = Tag::gamma_k;
        else if (name == "gamma_times_k")
            tag = Tag::gamma_times_k;
        else if (name == "gamma_times_k_t")
            tag = Tag::gamma_times_k_t;
        else if (name == "gamma_brace_k")
            tag = Tag::gamma_brace_k;
        else
            throw WeightVectorError("unknown domination kind '" + string(text) + "'");

        if (takes_k && colon == string_view::npos)
            throw WeightVectorError("domination kind '" + string(text) + "' needs a parameter, e.g. " + string(name) + ":2");
        if (! takes_k && colon != string_view::npos)
            throw WeightVectorError("domination kind '" + string(name) + "' takes no parameter");
        return DominationKind{tag, k};
    }

    auto DominationKind::to_string() const -> string
    {
        switch (tag) {
        case Tag::gamma: return "gamma";
        case Tag::gamma_t: return "gamma_t";
        case Tag::gamma_italian: return "gamma_I";
        case Tag::gamma_total_italian: return "gamma_tI";
        case Tag::gamma_k: return "gamma_k:" + std::to_string(k);
        case Tag::gamma_times_k: return "gamma_times_k:" + std::to_string(k);
        case Tag::gamma_times_k_t: return "gamma_times_k_t:" + std::to_string(k);
        case Tag::gamma_brace_k: return "gamma_brace_k:" + std::to_string(k);
        }
        return "unknown";
    }

    auto named_gamma(const Graph & g, const DominationKind & kind) -> optional<SolveResult>
    {
        return gamma_w(g, kind.vector());
    }

    auto italian_lex(const Graph & g, const Graph & h) -> LexDispatch
    {
        if (h.order() < 2)
            throw HypothesisError("H must be nontrivial (order >= 2)");
        if (g.order() == 0)
            throw HypothesisError("G must be nonempty");

        int gamma_h = *gamma_value(h, {1, 0});
        int gamma2_h = *gamma_value(h, {2, 0});
        int italian_h = *gamma_value(h, {2, 0, 0});

        WeightVector w{2, 2, 2, 0};
        if (! (italian_h == 3 && gamma_h == 3)) {
            if (g.has_isolated_vertex())
                throw HypothesisError("G must have no isolated vertex unless gamma_I(H) = gamma(H) = 3");
            if (gamma_h == 1)
                w = WeightVector{2, 1, 0};
            else if (gamma_h == 2 && gamma2_h == 2)
                w = WeightVector{2, 2, 0};
            else if (gamma_h == 2)
                w = WeightVector{2, 2, 1};
            else
                w = WeightVector{2, 2, 2};
        }

        auto result = gamma_w(g, w);
        if (! result)
            throw std::logic_error("italian_lex: dispatched vector " + w.to_string() + " infeasible on G");
        return LexDispatch{std::move(*result), gamma_h, gamma2_h, italian_h};
    }

    auto to_json(const SolveResult & r) -> nlohmann::json
    {
        return nlohmann::json{
            {"value", r.value},
            {"witness", r.witness.labels()},
            {"nodes_explored", r.nodes_explored},
            {"method", to_string(r.method)},
            {"vector", r.vector.entries()}};
    }

    auto to_json(const optional<SolveResult> & r) -> nlohmann::json
    {
        if (! r)
            return nlohmann::json{{"feasible", false}};
        return to_json(*r);
    }
}
