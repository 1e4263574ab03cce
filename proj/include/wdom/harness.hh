#pragma once

#include <wdom/graph.hh>
#include <wdom/solver.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wdom::harness
{
    enum class Status
    {
        holds,
        counterexample,
        hypotheses_not_met,
        budget_exceeded
    };

    auto to_string(Status s) -> std::string;

    /// One evaluated statement. A counterexample carries the graph6 of every
    /// graph involved and every vector, so it reproduces from `instance` alone.
    struct CheckVerdict
    {
        std::string check_id;
        Status status;
        nlohmann::json instance;
        nlohmann::json detail;
    };

    auto to_json(const CheckVerdict & v) -> nlohmann::json;

    struct Config
    {
        /// Cap on (l+1)^n for exhaustive oracles and optimal-function enumeration.
        std::uint64_t budget = default_oracle_budget;
        /// Largest product or corona order handed to the exact solver.
        int product_cap = 30;
        /// Largest order for which existence lemmas enumerate optimal functions.
        int enumeration_cap = 10;
    };

    /// The twelve vectors used for oracle comparison.
    auto vector_battery() -> std::vector<WeightVector>;

    /// (2,2,2), (2,2,1), (2,2,0), (2,1,0), (2,2,2,0).
    auto studied_vectors() -> std::vector<WeightVector>;

    /// Lexicographic-product right factors used by the product checks.
    auto product_factors() -> std::vector<std::pair<std::string, Graph>>;

    // Statements on a single instance.

    auto check_remark_monotonicity(const Graph & g, const WeightVector & w, const WeightVector & w2, const Config & cfg = {}) -> CheckVerdict;
    auto check_main_theorem(const Graph & g, const Graph & h, const Config & cfg = {}) -> CheckVerdict;
    auto check_casoraro(const Graph & g, const Graph & h, const Config & cfg = {}) -> CheckVerdict;
    auto check_lemma1(const Graph & g, const Graph & h, const Config & cfg = {}) -> CheckVerdict;
    auto check_corona(const Graph & g1, const Graph & g2, const WeightVector & w, const Config & cfg = {}) -> CheckVerdict;
    auto check_subgraph_monotonicity(const Graph & g, const std::vector<Edge> & removed, const WeightVector & w) -> CheckVerdict;

    /// γ_w = 1 and γ_w = 2 characterizations for every battery-style vector in
    /// the characterization set, plus the value-3 and value-4 characterizations
    /// of the five studied vectors.
    auto check_value_characterizations(const Graph & g) -> std::vector<CheckVerdict>;

    /// Vectors whose γ_w = 1 and γ_w = 2 characterizations are checked.
    auto characterization_vectors() -> std::vector<WeightVector>;

    auto check_value_one(const Graph & g, const WeightVector & w) -> CheckVerdict;
    auto check_value_two(const Graph & g, const WeightVector & w) -> CheckVerdict;

    /// Clauses (i)-(vi) of the general upper-bound theorem and (i)-(v) of its
    /// corollary, instantiated over small vectors (l <= 3, entries <= 4).
    auto check_general_upper_bounds(const Graph & g, const Config & cfg = {}) -> std::vector<CheckVerdict>;

    /// Lower bound <= γ_w <= upper bound for the studied vectors, the (2,2,1)
    /// dichotomy, and the degree-sum inequality on each returned witness.
    auto check_bound_sandwich(const Graph & g) -> std::vector<CheckVerdict>;

    /// B&B against the exhaustive oracle over the battery.
    auto check_oracle_equivalence(const Graph & g, const Config & cfg = {}) -> std::vector<CheckVerdict>;

    /// Search feasibility against w_l <= lδ for the monotone battery vectors.
    auto check_remark1(const Graph & g) -> std::vector<CheckVerdict>;

    /// γ_w <= γ_w' for every comparable monotone pair of the battery.
    auto check_monotonicity_pairs(const Graph & g, const Config & cfg = {}) -> std::vector<CheckVerdict>;

    /// γ_I <= γ_(2,1,0) <= γ_(2,2,0) <= γ_(2,2,1) <= γ_(2,2,2) when δ >= 1, and
    /// γ_(1,0,x) = γ, γ_(1,1,x) = γ_t for x in {0,1,2}.
    auto check_remark_chain(const Graph & g) -> std::vector<CheckVerdict>;

    /// The three "some optimal function has V_i empty" equivalences.
    auto check_equivalence_lemmas(const Graph & g, const Config & cfg = {}) -> std::vector<CheckVerdict>;

    /// Closed forms against the solver when g is a path or a cycle.
    auto check_formulas(const Graph & g) -> std::vector<CheckVerdict>;

    /// Each single-edge removal that keeps lδ' >= w_l, for the studied vectors.
    auto check_edge_removals(const Graph & g) -> std::vector<CheckVerdict>;

    /// Main theorem and the per-copy sum lemma with g as the left factor and each product factor.
    auto check_products(const Graph & g, const Config & cfg = {}) -> std::vector<CheckVerdict>;

    /// The corona theorem with g as the base graph against K2, P3 and K3.
    auto check_coronas(const Graph & g, const Config & cfg = {}) -> std::vector<CheckVerdict>;

    // Fixed-instance statements.

    auto check_figure_values() -> std::vector<CheckVerdict>;
    auto check_remark_chain_and_families() -> std::vector<CheckVerdict>;
    auto check_path_structure_lemmas(const Config & cfg = {}) -> std::vector<CheckVerdict>;

    // Corpora and sweeps.

    inline constexpr int corpus_enumeration_cap = 7;

    /// enumerate:N, connected:N, file:PATH, paths:A..B, cycles:A..B. Throws
    /// std::invalid_argument on malformed corpus strings or enumeration beyond the cap,
    /// std::runtime_error on unreadable files.
    auto load_corpus(const std::string & spec) -> std::vector<Graph>;

    /// Per-graph check names accepted by sweep.
    auto sweep_check_names() -> std::vector<std::string>;

    struct CheckSummary
    {
        std::string check_id;
        std::string corpus;
        int pass = 0;
        int fail = 0;
        int skip = 0;
        int budget_exceeded = 0;
        std::vector<CheckVerdict> counterexamples;
    };

    struct SweepReport
    {
        std::string corpus;
        int instances = 0;
        std::vector<CheckSummary> checks;

        auto clean() const -> bool;
    };

    /// Runs the named per-graph checks over the corpus with `jobs` workers.
    /// Results are merged in corpus order, so the report does not depend on
    /// the worker count. Throws std::invalid_argument for unknown check names.
    auto sweep(const std::string & corpus_name, const std::vector<Graph> & corpus, const std::vector<std::string> & check_ids,
        const Config & cfg = {}, int jobs = 1) -> SweepReport;

    auto to_json(const CheckSummary & s) -> nlohmann::json;
    auto to_json(const SweepReport & r) -> nlohmann::json;
    auto render_text(const SweepReport & r, std::ostream & out) -> void;
}
