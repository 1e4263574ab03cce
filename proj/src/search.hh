#pragma once

#include <wdom/graph.hh>
#include <wdom/solver.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace wdom::detail
{
    /// Depth-first search over labellings, vertices in index order and labels in
    /// increasing order, so leaves are reached in lexicographic order.
    ///
    /// Pruning:
    ///  - a vertex whose requirement exceeds what its neighbourhood can still
    ///    reach (assigned sum + l per unlabelled neighbour) kills the branch; for
    ///    an unlabelled vertex the smallest requirement over all labels is used;
    ///  - a lower bound on the weight still to be placed: every positive deficit
    ///    must be paid by unlabelled neighbours, each unit of label on u paying
    ///    one unit to each deficient neighbour of u, at most l units per vertex.
    ///    Both the fractional-cover bound and the largest single deficit are
    ///    admissible, so the search stays exact.
    class Search
    {
    public:
        Search(const Graph & g, const WeightVector & w);

        /// Lexicographically smallest labelling of minimum weight among those of
        /// weight < cutoff.
        auto minimise(int cutoff) -> std::optional<std::vector<int>>;

        /// Every feasible labelling of weight exactly target, in lexicographic
        /// order, until visit returns false.
        auto enumerate(int target, const std::function<bool(const std::vector<int> &)> & visit) -> void;

        /// Among feasible labellings of weight exactly target, the lexicographically
        /// smallest one with the most zeros.
        auto max_zeros(int target) -> std::optional<std::vector<int>>;

        auto nodes() const -> std::uint64_t { return nodes_; }

    private:
        enum class Mode
        {
            minimise,
            enumerate,
            max_zeros
        };

        auto dfs(int pos) -> bool;
        auto assign(Vertex v, int label) -> bool;
        auto unassign(Vertex v) -> void;
        auto extra_weight_bound() -> std::optional<int>;
        auto pruned_by_bound() -> bool;

        int n_, l_;
        std::vector<int> w_;
        int w_min_;
        std::vector<std::vector<Vertex>> adj_;

        std::vector<int> label_, sum_, open_;
        int weight_ = 0, zeros_ = 0, unlabelled_ = 0;

        Mode mode_ = Mode::minimise;
        int cutoff_ = 0;
        int best_zeros_ = -1;
        std::optional<std::vector<int>> best_;
        const std::function<bool(const std::vector<int> &)> * visit_ = nullptr;
        std::uint64_t nodes_ = 0;

        std::vector<int> deficit_, cover_, bucket_;
    };
}
