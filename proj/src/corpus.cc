#include <wdom/generators.hh>
#include <wdom/graph6.hh>
#include <wdom/harness.hh>

#include <atomic>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

using nlohmann::json;
using std::string;
using std::vector;

namespace wdom::harness
{
    namespace
    {
        auto parse_int(std::string_view text, const string & source) -> int
        {
            int value = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || end != text.data() + text.size())
                throw std::invalid_argument("corpus '" + source + "': expected an integer, got '" + string(text) + "'");
            return value;
        }

        auto parse_range(std::string_view text, const string & source) -> std::pair<int, int>
        {
            auto dots = text.find("..");
            if (dots == std::string_view::npos)
                throw std::invalid_argument("corpus '" + source + "': expected A..B");
            int a = parse_int(text.substr(0, dots), source), b = parse_int(text.substr(dots + 2), source);
            if (a > b)
                throw std::invalid_argument("corpus '" + source + "': empty range");
            return {a, b};
        }

        auto enumerate_up_to(int cap_n, bool connected, const string & source) -> vector<Graph>
        {
            if (cap_n < 1)
                throw std::invalid_argument("corpus '" + source + "': order must be at least 1");
            if (cap_n > corpus_enumeration_cap)
                throw std::invalid_argument("corpus '" + source + "': labelled enumeration is capped at n = " + std::to_string(corpus_enumeration_cap)
                                            + "; use file: for larger graphs");
            vector<Graph> result;
            for (int n = 1; n <= cap_n; ++n) {
                LabeledGraphEnumerator e(n, {connected, 0}, corpus_enumeration_cap);
                while (auto g = e.next())
                    result.push_back(std::move(*g));
            }
            return result;
        }

        using PerGraph = std::function<vector<CheckVerdict>(const Graph &, const Config &)>;

        auto registry() -> const std::map<string, PerGraph> &
        {
            static const std::map<string, PerGraph> table{
                {"oracle", [](const Graph & g, const Config & c) { return check_oracle_equivalence(g, c); }},
                {"remark1", [](const Graph & g, const Config &) { return check_remark1(g); }},
                {"monotonicity", [](const Graph & g, const Config & c) { return check_monotonicity_pairs(g, c); }},
                {"chain", [](const Graph & g, const Config &) { return check_remark_chain(g); }},
                {"value_characterizations", [](const Graph & g, const Config &) { return check_value_characterizations(g); }},
                {"bounds", [](const Graph & g, const Config &) { return check_bound_sandwich(g); }},
                {"general_upper_bounds", [](const Graph & g, const Config & c) { return check_general_upper_bounds(g, c); }},
                {"equivalence_lemmas", [](const Graph & g, const Config & c) { return check_equivalence_lemmas(g, c); }},
                {"formulas", [](const Graph & g, const Config &) { return check_formulas(g); }},
                {"subgraph_monotonicity", [](const Graph & g, const Config &) { return check_edge_removals(g); }},
                {"main_theorem",
                    [](const Graph & g, const Config & c) {
                        vector<CheckVerdict> r;
                        for (const auto & [name, h] : product_factors())
                            r.push_back(check_main_theorem(g, h, c));
                        return r;
                    }},
                {"lemma1",
                    [](const Graph & g, const Config & c) {
                        vector<CheckVerdict> r;
                        for (const auto & [name, h] : product_factors())
                            r.push_back(check_lemma1(g, h, c));
                        return r;
                    }},
                {"casoraro", [](const Graph & g, const Config & c) { return vector<CheckVerdict>{check_casoraro(g, empty_graph(3), c)}; }},
                {"corona", [](const Graph & g, const Config & c) { return check_coronas(g, c); }},
            };
            return table;
        }
    }

    auto load_corpus(const string & source) -> vector<Graph>
    {
        auto colon = source.find(':');
        if (colon == string::npos)
            throw std::invalid_argument("corpus '" + source + "': expected KIND:ARG");
        string kind = source.substr(0, colon);
        std::string_view arg = std::string_view(source).substr(colon + 1);

        if (kind == "enumerate")
            return enumerate_up_to(parse_int(arg, source), false, source);
        if (kind == "connected")
            return enumerate_up_to(parse_int(arg, source), true, source);
        if (kind == "paths" || kind == "cycles") {
            auto [a, b] = parse_range(arg, source);
            int lowest = kind == "paths" ? 1 : 3;
            if (a < lowest)
                throw std::invalid_argument("corpus '" + source + "': order must be at least " + std::to_string(lowest));
            vector<Graph> result;
            for (int n = a; n <= b; ++n)
                result.push_back(kind == "paths" ? path(n) : cycle(n));
            return result;
        }
        if (kind == "file") {
            std::ifstream in{string(arg)};
            if (! in)
                throw std::runtime_error("corpus '" + source + "': cannot open file");
            return read_graph6_corpus(in);
        }
        throw std::invalid_argument("corpus '" + source + "': unknown kind '" + kind + "'");
    }

    auto sweep_check_names() -> vector<string>
    {
        vector<string> names;
        for (const auto & [name, fn] : registry())
            names.push_back(name);
        return names;
    }

    auto SweepReport::clean() const -> bool
    {
        for (const auto & c : checks)
            if (c.fail > 0)
                return false;
        return true;
    }

    auto sweep(const string & corpus_name, const vector<Graph> & corpus, const vector<string> & check_ids, const Config & cfg, int jobs) -> SweepReport
    {
        vector<string> ids;
        for (const auto & id : check_ids) {
            if (id == "all") {
                for (const auto & name : sweep_check_names())
                    ids.push_back(name);
                continue;
            }
            if (! registry().count(id))
                throw std::invalid_argument("unknown check '" + id + "'");
            ids.push_back(id);
        }

        // results[i][c] holds the verdicts of check c on corpus entry i.
        vector<vector<vector<CheckVerdict>>> results(corpus.size(), vector<vector<CheckVerdict>>(ids.size()));
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < corpus.size(); i = next++)
                for (std::size_t c = 0; c < ids.size(); ++c) {
                    try {
                        results[i][c] = registry().at(ids[c])(corpus[i], cfg);
                    } catch (const BudgetExceeded & e) {
                        results[i][c] = {CheckVerdict{ids[c], Status::budget_exceeded, {{"graph6", write_graph6(corpus[i], true)}}, {{"reason", e.what()}}}};
                    }
                }
        };

        int workers = std::max(1, std::min<int>(jobs, static_cast<int>(corpus.size())));
        if (workers == 1)
            worker();
        else {
            vector<std::thread> pool;
            for (int t = 0; t < workers; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
        }

        SweepReport report{corpus_name, static_cast<int>(corpus.size()), {}};
        for (std::size_t c = 0; c < ids.size(); ++c) {
            CheckSummary s;
            s.check_id = ids[c];
            s.corpus = corpus_name;
            for (std::size_t i = 0; i < corpus.size(); ++i)
                for (const auto & v : results[i][c]) {
                    switch (v.status) {
                    case Status::holds: ++s.pass; break;
                    case Status::counterexample:
                        ++s.fail;
                        s.counterexamples.push_back(v);
                        s.counterexamples.back().instance["corpus_index"] = i;
                        break;
                    case Status::hypotheses_not_met: ++s.skip; break;
                    case Status::budget_exceeded:
                        ++s.skip;
                        ++s.budget_exceeded;
                        break;
                    }
                }
            report.checks.push_back(std::move(s));
        }
        return report;
    }

    auto to_json(const CheckSummary & s) -> json
    {
        json cex = json::array();
        for (const auto & v : s.counterexamples)
            cex.push_back(to_json(v));
        return {{"check_id", s.check_id}, {"corpus", s.corpus}, {"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip},
            {"budget_exceeded", s.budget_exceeded}, {"counterexamples", cex}};
    }

    auto to_json(const SweepReport & r) -> json
    {
        json checks = json::array();
        for (const auto & c : r.checks)
            checks.push_back(to_json(c));
        return {{"corpus", r.corpus}, {"instances", r.instances}, {"checks", checks}};
    }

    auto render_text(const SweepReport & r, std::ostream & out) -> void
    {
        out << "corpus " << r.corpus << ": " << r.instances << " instances\n";
        for (const auto & c : r.checks) {
            out << "  " << c.check_id << ": pass=" << c.pass << " fail=" << c.fail << " skip=" << c.skip;
            if (c.budget_exceeded)
                out << " (budget_exceeded=" << c.budget_exceeded << ")";
            out << '\n';
            for (const auto & v : c.counterexamples)
                out << "    counterexample " << to_json(v).dump() << '\n';
        }
        out << (r.clean() ? "clean\n" : "counterexamples found\n");
    }
}
