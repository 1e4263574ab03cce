#pragma once

#include <wdom/graph.hh>
#include <wdom/solver.hh>

#include <optional>
#include <string>
#include <vector>

namespace wdom::closed_forms
{
    struct FormulaResult
    {
        int value;
        std::string source;
    };

    enum class Family
    {
        path,
        cycle
    };

    auto to_string(Family f) -> std::string;

    /// Every evaluator below requires n >= 3 and throws std::domain_error otherwise.

    auto gamma_t_path(int n) -> int;

    auto gamma_222_path(int n) -> int;
    auto gamma_222_cycle(int n) -> int;

    auto gamma_221_path(int n) -> int;
    auto gamma_221_cycle(int n) -> int;

    auto gamma_220_path(int n) -> int;
    auto gamma_220_cycle(int n) -> int;

    auto gamma_210_path(int n) -> int;
    auto gamma_210_cycle(int n) -> int;

    auto gamma_2220_path(int n) -> int;
    auto gamma_2220_cycle(int n) -> int;

    /// The closed form for (family, w) at order n, absent when no formula is
    /// known for the pair. (1,1) on paths is total domination.
    auto closed_form(Family family, const WeightVector & w, int n) -> std::optional<FormulaResult>;

    /// Vectors with a closed form on the given family.
    auto formula_vectors(Family family) -> std::vector<WeightVector>;

    enum class LowerBoundClause
    {
        i,
        ii,
        iii,
        iv
    };

    auto to_string(LowerBoundClause c) -> std::string;

    /// Degree-counting lower bounds for graphs with δ >= 1:
    ///   (i)   w = (k+l-1, k+l-2, ..., k-1), k <= lδ+1:  ⌈(k+l-1)n/(Δ+1)⌉
    ///   (ii)  w = (k, ..., k), k <= lδ:                 ⌈kn/Δ⌉
    ///   (iii) w = (k, k-1, ..., k-1), k <= lδ+1:        ⌈kn/(Δ+1)⌉
    ///   (iv)  w monotone, w_l <= lδ:                    ⌈w_0 n/(Δ+w_0)⌉
    /// Absent when w does not have the clause's shape or a hypothesis fails.
    auto lower_bound(const Graph & g, const WeightVector & w, LowerBoundClause which) -> std::optional<int>;

    struct NamedBound
    {
        std::string name;
        int value;

        friend auto operator==(const NamedBound &, const NamedBound &) -> bool = default;
    };

    /// Every applicable lower bound on γ_w(G): the four clauses above plus the
    /// vector-specific ones for (2,2,2), (2,2,1), (2,2,0), (2,1,0), (2,2,2,0).
    /// Empty for graphs with an isolated vertex.
    auto lower_bound_suite(const Graph & g, const WeightVector & w) -> std::vector<NamedBound>;

    /// Applicable upper bounds for the five studied vectors, each evaluated with
    /// exact inner solves (desk-scale only). Graphs with an isolated vertex get
    /// an empty list; bounds through γ_×2,t need δ >= 2.
    ///   (2,2,2):   2γ_t, γ_×2,t
    ///   (2,2,1):   3γ, 2γ_t, γ_×2,t
    ///   (2,2,0):   2γ, γ_×2,t
    ///   (2,1,0):   γ_×2 - |L| + |S|, 2γ
    ///   (2,2,2,0): 3γ, γ_(2,2,2)
    auto upper_bound_suite(const Graph & g, const WeightVector & w) -> std::vector<NamedBound>;

    /// 2γ_t(Δ) + γ_t < 2n + 2Δ + 2, the integer form of γ_t < (n+Δ+1)/(Δ+1/2).
    auto dichotomy_applies(int n, int max_deg, int gamma_t) -> bool;

    /// When the condition above holds on a graph without isolated vertices, the
    /// two admissible values {2γ_t, ⌈(2n+γ_t)/(Δ+1)⌉} of γ_(2,2,1)(G).
    auto dichotomy_221(const Graph & g) -> std::optional<std::pair<int, int>>;

    /// ⌈a/b⌉ for a >= 0, b > 0.
    constexpr auto ceil_div(long long a, long long b) -> long long { return (a + b - 1) / b; }
}
