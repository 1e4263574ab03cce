#pragma once

#include <wdom/graph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace wdom
{
    class WeightVectorError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Exhaustive search would visit more labellings than the configured budget.
    class BudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A theorem-backed dispatch was asked for an instance outside its hypotheses.
    class HypothesisError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// w = (w_0, ..., w_l) with w_0 >= 1, all entries nonnegative, l >= 1. The
    /// largest label l is implied by the length.
    class WeightVector
    {
    public:
        explicit WeightVector(std::vector<int> entries);
        WeightVector(std::initializer_list<int> entries);

        /// Parses "2,2,1" (surrounding parentheses and spaces are tolerated).
        static auto parse(std::string_view text) -> WeightVector;

        auto max_label() const -> int { return static_cast<int>(entries_.size()) - 1; }
        auto operator[](int i) const -> int { return entries_.at(i); }
        auto entries() const -> const std::vector<int> & { return entries_; }
        auto is_monotone() const -> bool;
        auto min_requirement() const -> int;

        /// w ≺ w' : same length and entrywise <=.
        auto precedes(const WeightVector & other) const -> bool;

        /// "(2,2,1)"
        auto to_string() const -> std::string;

        friend auto operator==(const WeightVector &, const WeightVector &) -> bool = default;
        friend auto operator<=>(const WeightVector &, const WeightVector &) = default;

    private:
        std::vector<int> entries_;
    };

    /// An assignment V(G) -> {0, ..., l}.
    class LabelFunction
    {
    public:
        LabelFunction() = default;
        explicit LabelFunction(std::vector<int> labels) :
            labels_(std::move(labels))
        {
        }

        auto labels() const -> const std::vector<int> & { return labels_; }
        auto operator[](Vertex v) const -> int { return labels_.at(v); }
        auto size() const -> int { return static_cast<int>(labels_.size()); }

        /// |V_i|
        auto level_size(int i) const -> int;

        /// V_i
        auto level_set(int i) const -> VertexSet;

        /// f(S)
        auto sum_over(const VertexSet & s) const -> int;

        /// f(N(v))
        auto neighbourhood_sum(const Graph & g, Vertex v) const -> int;

        friend auto operator==(const LabelFunction &, const LabelFunction &) -> bool = default;
        friend auto operator<=>(const LabelFunction &, const LabelFunction &) = default;

    private:
        std::vector<int> labels_;
    };

    /// ω(f)
    auto weight(const LabelFunction & f) -> int;

    /// True iff f(N(v)) >= w_{f(v)} for every vertex. Throws WeightVectorError if
    /// f does not match the order of g or uses a label above l.
    auto validate(const Graph & g, const WeightVector & w, const LabelFunction & f) -> bool;

    enum class Method
    {
        oracle,
        branch_and_bound,
        closed_form
    };

    auto to_string(Method m) -> std::string;

    struct SolveResult
    {
        int value;
        LabelFunction witness;
        std::uint64_t nodes_explored;
        Method method;
        WeightVector vector;
    };

    inline constexpr std::uint64_t default_oracle_budget = 1'000'000'000;

    /// Search feasibility for the given vector. For monotone w this is decided by
    /// w_l <= l * δ(G); otherwise by search. The empty graph is vacuously feasible.
    auto exists_w_dominating(const Graph & g, const WeightVector & w) -> bool;

    /// Exhaustive oracle over all (l+1)^n labellings. The witness is the
    /// lexicographically smallest optimal labelling. Throws BudgetExceeded when
    /// (l+1)^n exceeds budget.
    auto gamma_w_bruteforce(const Graph & g, const WeightVector & w, std::uint64_t budget = default_oracle_budget)
        -> std::optional<SolveResult>;

    /// Exact branch and bound. Same value and witness contract as the oracle.
    auto gamma_w(const Graph & g, const WeightVector & w) -> std::optional<SolveResult>;

    /// Calls visit for every w-dominating function of weight γ_w(G), in
    /// lexicographic order, until visit returns false. Throws BudgetExceeded when
    /// (l+1)^n exceeds budget. Does nothing when no w-dominating function exists.
    auto for_each_optimal(const Graph & g, const WeightVector & w, const std::function<bool(const LabelFunction &)> & visit,
        std::uint64_t budget = default_oracle_budget) -> void;

    auto enumerate_optimal(const Graph & g, const WeightVector & w, std::uint64_t budget = default_oracle_budget)
        -> std::vector<LabelFunction>;

    /// ν_w(G): the largest |V_0| over all γ_w(G)-functions.
    auto nu_w(const Graph & g, const WeightVector & w) -> std::optional<int>;

    struct DominationKind
    {
        enum class Tag
        {
            gamma,
            gamma_t,
            gamma_k,
            gamma_times_k,
            gamma_times_k_t,
            gamma_italian,
            gamma_total_italian,
            gamma_brace_k
        };

        Tag tag;
        int k = 1;

        /// γ=(1,0); γ_t=(1,1); γ_k=(k,0); γ_×k=(k,k-1); γ_×k,t=(k,k);
        /// γ_I=(2,0,0); γ_tI=(2,1,1); γ_{k}=(k,k-1,...,1,0).
        auto vector() const -> WeightVector;

        /// Accepts gamma, gamma_t, gamma_I, gamma_tI, gamma_k:K, gamma_times_k:K,
        /// gamma_times_k_t:K, gamma_brace_k:K.
        static auto parse(std::string_view text) -> DominationKind;

        auto to_string() const -> std::string;
    };

    auto named_gamma(const Graph & g, const DominationKind & kind) -> std::optional<SolveResult>;

    /// Value of γ_w(G) only; absent when infeasible.
    auto gamma_value(const Graph & g, const WeightVector & w) -> std::optional<int>;

    struct LexDispatch
    {
        SolveResult result;
        int gamma_h;
        int gamma2_h;
        int gamma_italian_h;
    };

    /// γ_I(G ∘ H) through γ(H), γ_2(H), γ_I(H) and one solve on G:
    ///   γ(H)=1 -> (2,1,0);  γ_2(H)=γ(H)=2 -> (2,2,0);  γ_2(H)>γ(H)=2 -> (2,2,1);
    ///   γ(H)>=3 unless γ_I(H)=γ(H)=3 -> (2,2,2);  γ_I(H)=γ(H)=3 -> (2,2,2,0).
    /// Throws HypothesisError for a trivial H, an empty G, or a G with an
    /// isolated vertex outside the γ_I(H)=γ(H)=3 case.
    auto italian_lex(const Graph & g, const Graph & h) -> LexDispatch;

    auto to_json(const SolveResult & r) -> nlohmann::json;
    auto to_json(const std::optional<SolveResult> & r) -> nlohmann::json;
}
