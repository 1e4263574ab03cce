#include <wdom/closed_forms.hh>
#include <wdom/generators.hh>
#include <wdom/graph6.hh>
#include <wdom/harness.hh>
#include <wdom/solver.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    /// Bad command-line input; reported with exit status 2.
    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    auto to_int(std::string_view text, const string & context) -> int
    {
        int value = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size())
            throw UsageError(context + ": expected an integer, got '" + string(text) + "'");
        return value;
    }

    auto split(const string & text, char sep) -> vector<string>
    {
        vector<string> parts;
        std::stringstream in(text);
        for (string part; std::getline(in, part, sep);)
            parts.push_back(part);
        return parts;
    }

    /// path:N, cycle:N, complete:N, star:N, empty:N, hk:K,R, fixture:NAME,
    /// g6:CODE, file:PATH (first record), or a bare graph6 string.
    auto parse_graph(const string & expr) -> wdom::Graph
    {
        auto colon = expr.find(':');
        if (colon == string::npos)
            return wdom::parse_graph6(expr);

        string kind = expr.substr(0, colon), arg = expr.substr(colon + 1);
        if (kind == "path")
            return wdom::path(to_int(arg, expr));
        if (kind == "cycle")
            return wdom::cycle(to_int(arg, expr));
        if (kind == "complete")
            return wdom::complete(to_int(arg, expr));
        if (kind == "star")
            return wdom::star(to_int(arg, expr));
        if (kind == "empty")
            return wdom::empty_graph(to_int(arg, expr));
        if (kind == "hk") {
            auto parts = split(arg, ',');
            if (parts.size() != 2)
                throw UsageError(expr + ": expected hk:K,R");
            return wdom::family_hk(to_int(parts[0], expr), to_int(parts[1], expr));
        }
        if (kind == "fixture")
            return wdom::fixture(arg);
        if (kind == "g6")
            return wdom::parse_graph6(arg);
        if (kind == "file") {
            std::ifstream in(arg);
            if (! in)
                throw UsageError(expr + ": cannot open file");
            auto graphs = wdom::read_graph6_corpus(in);
            if (graphs.empty())
                throw UsageError(expr + ": no graph in file");
            return graphs.front();
        }
        // Long-form graph6 and some short-form codes contain no colon, but a
        // colon-bearing string that matches no generator is still tried as graph6.
        return wdom::parse_graph6(expr);
    }

    auto budget_from(std::optional<std::uint64_t> flag) -> std::uint64_t
    {
        if (flag)
            return *flag;
        if (const char * env = std::getenv("WDOM_BUDGET")) {
            std::uint64_t value = 0;
            string text(env);
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || end != text.data() + text.size() || value == 0)
                throw UsageError("WDOM_BUDGET: expected a positive integer, got '" + text + "'");
            return value;
        }
        return wdom::default_oracle_budget;
    }

    auto print_result(const wdom::SolveResult & r, bool as_json) -> void
    {
        if (as_json) {
            std::cout << wdom::to_json(r).dump() << '\n';
            return;
        }
        std::cout << "vector    " << r.vector.to_string() << '\n';
        std::cout << "value     " << r.value << '\n';
        std::cout << "witness  ";
        for (int x : r.witness.labels())
            std::cout << ' ' << x;
        std::cout << '\n';
        std::cout << "method    " << wdom::to_string(r.method) << '\n';
        std::cout << "nodes     " << r.nodes_explored << '\n';
    }

    struct ComputeArgs
    {
        string graph, vector, kind, witness;
        bool oracle = false, as_json = false;
    };

    auto run_compute(const ComputeArgs & a, std::uint64_t budget) -> int
    {
        auto g = parse_graph(a.graph);
        if (a.vector.empty() == a.kind.empty())
            throw UsageError("compute: give exactly one of --vector and --kind");
        wdom::WeightVector w = a.kind.empty() ? wdom::WeightVector::parse(a.vector) : wdom::DominationKind::parse(a.kind).vector();

        if (! a.witness.empty()) {
            vector<int> labels;
            for (const auto & part : split(a.witness, ','))
                labels.push_back(to_int(part, "--validate-witness"));
            wdom::LabelFunction f(labels);
            bool valid = wdom::validate(g, w, f);
            json out{{"valid", valid}, {"weight", wdom::weight(f)}, {"vector", w.entries()}};
            if (valid) {
                auto opt = wdom::gamma_value(g, w);
                out["optimal"] = opt && *opt == wdom::weight(f);
            }
            if (a.as_json)
                std::cout << out.dump() << '\n';
            else
                std::cout << (valid ? "valid" : "invalid") << " weight " << wdom::weight(f)
                          << (valid ? (out["optimal"].get<bool>() ? " optimal" : " not optimal") : "") << '\n';
            return valid ? 0 : 1;
        }

        auto r = a.oracle ? wdom::gamma_w_bruteforce(g, w, budget) : wdom::gamma_w(g, w);
        if (! r) {
            std::cout << json{{"feasible", false}}.dump() << '\n';
            return 0;
        }
        print_result(*r, a.as_json);
        return 0;
    }

    struct LexArgs
    {
        string graph, graph2;
        bool verify = false, as_json = false;
        int product_cap = 30;
    };

    auto run_lex(const LexArgs & a) -> int
    {
        auto g = parse_graph(a.graph);
        auto h = parse_graph(a.graph2);
        wdom::LexDispatch d = [&] {
            try {
                return wdom::italian_lex(g, h);
            } catch (const wdom::HypothesisError & e) {
                throw UsageError(string("lex: hypothesis not met: ") + e.what());
            }
        }();

        json out{{"value", d.result.value}, {"vector", d.result.vector.entries()}, {"witness_on_G", d.result.witness.labels()},
            {"gamma_H", d.gamma_h}, {"gamma2_H", d.gamma2_h}, {"gamma_I_H", d.gamma_italian_h}};
        bool agree = true;
        if (a.verify) {
            long long order = static_cast<long long>(g.order()) * h.order();
            if (order > a.product_cap)
                throw UsageError("lex --verify: product order " + std::to_string(order) + " exceeds --product-cap " + std::to_string(a.product_cap));
            auto direct = wdom::gamma_value(wdom::lexicographic_product(g, h), {2, 0, 0});
            out["product_value"] = direct ? json(*direct) : json(nullptr);
            agree = direct && *direct == d.result.value;
            out["agree"] = agree;
        }

        if (a.as_json)
            std::cout << out.dump() << '\n';
        else {
            std::cout << "gamma_I(G o H) " << d.result.value << '\n';
            std::cout << "vector         " << d.result.vector.to_string() << '\n';
            std::cout << "gamma(H)       " << d.gamma_h << '\n';
            std::cout << "gamma_2(H)     " << d.gamma2_h << '\n';
            std::cout << "gamma_I(H)     " << d.gamma_italian_h << '\n';
            if (a.verify)
                std::cout << "product        " << out["product_value"].dump() << (agree ? " (agrees)" : " (DISAGREES)") << '\n';
        }
        return agree ? 0 : 1;
    }

    struct TableArgs
    {
        string family, vector, range;
        bool check = false, as_json = false;
    };

    auto run_table(const TableArgs & a) -> int
    {
        wdom::closed_forms::Family family;
        if (a.family == "path")
            family = wdom::closed_forms::Family::path;
        else if (a.family == "cycle")
            family = wdom::closed_forms::Family::cycle;
        else
            throw UsageError("table: --family must be path or cycle");
        auto w = wdom::WeightVector::parse(a.vector);

        auto dots = a.range.find("..");
        if (dots == string::npos)
            throw UsageError("table: --range must be A..B");
        int lo = to_int(a.range.substr(0, dots), "--range"), hi = to_int(a.range.substr(dots + 2), "--range");
        int least = family == wdom::closed_forms::Family::path ? 1 : 3;
        if (lo < least || lo > hi)
            throw UsageError("table: empty or invalid range");

        bool has_formula = wdom::closed_forms::closed_form(family, w, std::max(lo, 3)).has_value();
        bool solve = a.check || ! has_formula;
        if (! has_formula)
            std::cerr << "no closed form for " << w.to_string() << " on " << a.family << "; showing solver values only\n";

        bool all_match = true;
        json rows = json::array();
        for (int n = lo; n <= hi; ++n) {
            auto g = family == wdom::closed_forms::Family::path ? wdom::path(n) : wdom::cycle(n);
            json row{{"n", n}};
            std::optional<int> formula;
            if (has_formula && n >= 3)
                formula = wdom::closed_forms::closed_form(family, w, n)->value;
            row["formula"] = formula ? json(*formula) : json(nullptr);
            if (solve) {
                auto v = wdom::gamma_value(g, w);
                row["solver"] = v ? json(*v) : json(nullptr);
                if (a.check && formula) {
                    bool match = v && *v == *formula;
                    row["match"] = match;
                    all_match = all_match && match;
                }
            }
            rows.push_back(row);
        }

        if (a.as_json)
            std::cout << json{{"family", a.family}, {"vector", w.entries()}, {"rows", rows}}.dump() << '\n';
        else {
            std::cout << "n\tformula" << (solve ? "\tsolver" : "") << (a.check && has_formula ? "\tmatch" : "") << '\n';
            auto cell = [](const json & j) { return j.is_null() ? string("-") : j.dump(); };
            for (const auto & row : rows) {
                std::cout << row["n"].get<int>() << '\t' << cell(row["formula"]);
                if (solve)
                    std::cout << '\t' << cell(row["solver"]);
                if (row.contains("match"))
                    std::cout << '\t' << (row["match"].get<bool>() ? "yes" : "NO");
                std::cout << '\n';
            }
        }
        return all_match ? 0 : 1;
    }

    struct SweepArgs
    {
        string corpus, out;
        vector<string> checks{"all"};
        int jobs = 1;
        bool as_json = false;
    };

    auto run_sweep(const SweepArgs & a, std::uint64_t budget) -> int
    {
        std::vector<wdom::Graph> corpus;
        try {
            corpus = wdom::harness::load_corpus(a.corpus);
        } catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        } catch (const std::runtime_error & e) {
            throw UsageError(e.what());
        }

        vector<string> checks;
        for (const auto & c : a.checks)
            for (const auto & part : split(c, ','))
                checks.push_back(part);

        wdom::harness::Config cfg;
        cfg.budget = budget;
        wdom::harness::SweepReport report;
        try {
            report = wdom::harness::sweep(a.corpus, corpus, checks, cfg, a.jobs);
        } catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }

        auto doc = wdom::harness::to_json(report);
        if (! a.out.empty()) {
            std::ofstream out(a.out);
            if (! out)
                throw UsageError("cannot write " + a.out);
            out << doc.dump(2) << '\n';
        }
        if (a.as_json)
            std::cout << doc.dump() << '\n';
        else
            wdom::harness::render_text(report, std::cout);
        return report.clean() ? 0 : 1;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Exact w-domination numbers of small graphs"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> budget_flag;
    app.add_option("--budget", budget_flag, "Cap on (l+1)^n for exhaustive search (default: WDOM_BUDGET or 1e9)");

    ComputeArgs compute;
    auto * c = app.add_subcommand("compute", "Compute gamma_w(G) with a witness");
    c->add_option("--graph", compute.graph, "Graph expression")->required();
    c->add_option("--vector", compute.vector, "Weight vector, e.g. 2,2,1");
    c->add_option("--kind", compute.kind, "Named parameter, e.g. gamma_t or gamma_times_k:2");
    c->add_flag("--oracle", compute.oracle, "Use exhaustive search");
    c->add_flag("--json", compute.as_json, "JSON output");
    c->add_option("--validate-witness", compute.witness, "Check a labelling given as a comma list");
    c->add_option("--budget", budget_flag, "Cap on (l+1)^n for exhaustive search");

    LexArgs lex;
    auto * l = app.add_subcommand("lex", "Italian domination number of G o H");
    l->add_option("--graph", lex.graph, "Left factor G")->required();
    l->add_option("--graph2", lex.graph2, "Right factor H")->required();
    l->add_flag("--verify", lex.verify, "Also solve the product directly");
    l->add_option("--product-cap", lex.product_cap, "Largest product order solved by --verify");
    l->add_flag("--json", lex.as_json, "JSON output");

    TableArgs table;
    auto * t = app.add_subcommand("table", "Closed-form values on paths or cycles");
    t->add_option("--family", table.family, "path or cycle")->required();
    t->add_option("--vector", table.vector, "Weight vector")->required();
    t->add_option("--range", table.range, "Orders A..B")->required();
    t->add_flag("--check", table.check, "Compare with the solver");
    t->add_flag("--json", table.as_json, "JSON output");

    SweepArgs sweep;
    auto * s = app.add_subcommand("sweep", "Run theorem checks over a corpus");
    s->add_option("--corpus", sweep.corpus, "enumerate:N, connected:N, paths:A..B, cycles:A..B or file:PATH")->required();
    s->add_option("--checks", sweep.checks, "Check names, comma separated, or all");
    s->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::PositiveNumber);
    s->add_option("--out", sweep.out, "Write the JSON report here");
    s->add_option("--budget", budget_flag, "Cap on (l+1)^n for exhaustive search");
    s->add_flag("--json", sweep.as_json, "JSON report on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto budget = budget_from(budget_flag);
        if (c->parsed())
            return run_compute(compute, budget);
        if (l->parsed())
            return run_lex(lex);
        if (t->parsed())
            return run_table(table);
        return run_sweep(sweep, budget);
    } catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const wdom::BudgetExceeded & e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
