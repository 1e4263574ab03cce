#include "search.hh"

#include <algorithm>

using std::optional;
using std::vector;

namespace wdom::detail
{
    Search::Search(const Graph & g, const WeightVector & w) :
        n_(g.order()),
        l_(w.max_label()),
        w_(w.entries()),
        w_min_(w.min_requirement()),
        label_(n_, -1),
        sum_(n_, 0),
        open_(n_, 0),
        deficit_(n_, 0),
        cover_(n_, 0)
    {
        adj_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v) {
            adj_.push_back(g.neighbours(v));
            open_[v] = g.degree(v);
        }
        bucket_.assign(static_cast<std::size_t>(n_) + 1, 0);
    }

    auto Search::assign(Vertex v, int label) -> bool
    {
        label_[v] = label;
        weight_ += label;
        --unlabelled_;
        if (label == 0)
            ++zeros_;

        bool ok = sum_[v] + l_ * open_[v] >= w_[label];
        for (auto u : adj_[v]) {
            sum_[u] += label;
            --open_[u];
        }
        if (! ok)
            return false;

        for (auto u : adj_[v]) {
            int need = label_[u] >= 0 ? w_[label_[u]] : w_min_;
            if (sum_[u] + l_ * open_[u] < need)
                return false;
        }
        return true;
    }

    auto Search::unassign(Vertex v) -> void
    {
        int label = label_[v];
        for (auto u : adj_[v]) {
            sum_[u] -= label;
            ++open_[u];
        }
        if (label == 0)
            --zeros_;
        ++unlabelled_;
        weight_ -= label;
        label_[v] = -1;
    }

    auto Search::extra_weight_bound() -> optional<int>
    {
        int total = 0, largest = 0;
        for (Vertex x = 0; x < n_; ++x) {
            int need = label_[x] >= 0 ? w_[label_[x]] : w_min_;
            int d = std::max(0, need - sum_[x]);
            deficit_[x] = d;
            total += d;
            largest = std::max(largest, d);
        }
        if (total == 0)
            return 0;

        std::fill(bucket_.begin(), bucket_.end(), 0);
        for (Vertex u = 0; u < n_; ++u) {
            if (label_[u] >= 0)
                continue;
            int c = 0;
            for (auto x : adj_[u])
                if (deficit_[x] > 0)
                    ++c;
            ++bucket_[c];
        }

        int extra = 0, remaining = total;
        for (int c = n_; c > 0 && remaining > 0; --c)
            for (int k = 0; k < bucket_[c] && remaining > 0; ++k) {
                int units = std::min(l_, (remaining + c - 1) / c);
                extra += units;
                remaining -= units * c;
            }
        if (remaining > 0)
            return std::nullopt;

        return std::max(extra, largest);
    }

    auto Search::pruned_by_bound() -> bool
    {
        auto extra = extra_weight_bound();
        if (! extra)
            return true;
        int lower = weight_ + *extra;
        switch (mode_) {
        case Mode::minimise: return lower >= cutoff_;
        case Mode::enumerate: return lower > cutoff_;
        case Mode::max_zeros: return lower > cutoff_ || zeros_ + unlabelled_ <= best_zeros_;
        }
        return false;
    }

    auto Search::dfs(int pos) -> bool
    {
        ++nodes_;
        if (pos == n_) {
            switch (mode_) {
            case Mode::minimise:
                best_ = label_;
                cutoff_ = weight_;
                return true;
            case Mode::enumerate:
                if (weight_ == cutoff_)
                    return (*visit_)(label_);
                return true;
            case Mode::max_zeros:
                if (weight_ == cutoff_ && zeros_ > best_zeros_) {
                    best_zeros_ = zeros_;
                    best_ = label_;
                }
                return true;
            }
        }

        Vertex v = pos;
        for (int label = 0; label <= l_; ++label) {
            if (mode_ == Mode::minimise ? weight_ + label >= cutoff_ : weight_ + label > cutoff_)
                break;
            bool keep_going = true;
            if (assign(v, label) && ! pruned_by_bound())
                keep_going = dfs(pos + 1);
            unassign(v);
            if (! keep_going)
                return false;
        }
        return true;
    }

    auto Search::minimise(int cutoff) -> optional<vector<int>>
    {
        mode_ = Mode::minimise;
        cutoff_ = cutoff;
        best_.reset();
        unlabelled_ = n_;
        if (! pruned_by_bound())
            dfs(0);
        return best_;
    }

    auto Search::enumerate(int target, const std::function<bool(const vector<int> &)> & visit) -> void
    {
        mode_ = Mode::enumerate;
        cutoff_ = target;
        visit_ = &visit;
        unlabelled_ = n_;
        if (! pruned_by_bound())
            dfs(0);
        visit_ = nullptr;
    }

    auto Search::max_zeros(int target) -> optional<vector<int>>
    {
        mode_ = Mode::max_zeros;
        cutoff_ = target;
        best_zeros_ = -1;
        best_.reset();
        unlabelled_ = n_;
        if (! pruned_by_bound())
            dfs(0);
        return best_;
    }
}
