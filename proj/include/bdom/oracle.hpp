#pragma once

// Brute-force minimum dominating sets for small grids, by increasing
// cardinality over row-major lexicographic k-subsets.

#include <optional>
#include <vector>

#include "bdom/grid.hpp"

namespace bdom {

struct OracleOptions {
    int max_cells = 25;
};

namespace detail {

class SubsetSearch {
public:
    SubsetSearch(const GridDims& dims, const BroadcastParams& params)
        : dims_(dims), params_(params), cells_(dims.cells()), rec_(static_cast<std::size_t>(cells_), 0) {
        gain_.assign(static_cast<std::size_t>(cells_) * static_cast<std::size_t>(cells_), 0);
        for (int u = 0; u < cells_; ++u)
            for (int v = 0; v < cells_; ++v)
                gain_[idx(u, v)] = signal(params.t, distance(vertex(u), vertex(v)));
        // suffix[u][c]: total signal u can still get from candidates c, c+1, ...
        suffix_.assign(static_cast<std::size_t>(cells_) * static_cast<std::size_t>(cells_ + 1), 0);
        for (int u = 0; u < cells_; ++u)
            for (int c = cells_ - 1; c >= 0; --c)
                suffix_[sidx(u, c)] = suffix_[sidx(u, c + 1)] + gain_[idx(u, c)];
    }

    /// First dominating k-subset in lexicographic order, if any.
    std::optional<TowerSet> find(int k) {
        chosen_.clear();
        std::fill(rec_.begin(), rec_.end(), 0);
        if (!descend(0, k)) return std::nullopt;
        std::vector<Vertex> out;
        for (int c : chosen_) out.push_back(vertex(c));
        return TowerSet(std::move(out));
    }

private:
    [[nodiscard]] Vertex vertex(int c) const { return {c / dims_.cols + 1, c % dims_.cols + 1}; }
    [[nodiscard]] std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(cells_) + static_cast<std::size_t>(v);
    }
    [[nodiscard]] std::size_t sidx(int u, int c) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(cells_ + 1) + static_cast<std::size_t>(c);
    }

    // A vertex short of r must be able to catch up using `left` of the
    // candidates from `next` on; each adds at most t.
    [[nodiscard]] bool hopeless(int next, int left) const {
        for (int u = 0; u < cells_; ++u) {
            const int deficit = params_.r - rec_[static_cast<std::size_t>(u)];
            if (deficit <= 0) continue;
            if (std::min(suffix_[sidx(u, next)], left * params_.t) < deficit) return true;
        }
        return false;
    }

    bool descend(int next, int left) {
        if (hopeless(next, left)) return false;
        if (left == 0) return true;
        for (int c = next; c <= cells_ - left; ++c) {
            chosen_.push_back(c);
            for (int u = 0; u < cells_; ++u) rec_[static_cast<std::size_t>(u)] += gain_[idx(u, c)];
            if (descend(c + 1, left - 1)) return true;
            for (int u = 0; u < cells_; ++u) rec_[static_cast<std::size_t>(u)] -= gain_[idx(u, c)];
            chosen_.pop_back();
        }
        return false;
    }

    GridDims dims_;
    BroadcastParams params_;
    int cells_;
    std::vector<int> rec_;
    std::vector<int> gain_;
    std::vector<int> suffix_;
    std::vector<int> chosen_;
};

inline void check_oracle_size(const GridDims& dims, const OracleOptions& opt) {
    if (dims.cells() > opt.max_cells)
        throw invalid_input("oracle refuses " + std::to_string(dims.rows) + "x" + std::to_string(dims.cols) +
                            ": more than " + std::to_string(opt.max_cells) + " vertices");
}

}  // namespace detail

struct OracleResult {
    int gamma = 0;
    TowerSet witness;
};

[[nodiscard]] inline OracleResult brute_min(const GridDims& dims, const BroadcastParams& params,
                                            const OracleOptions& opt = {}) {
    detail::check_oracle_size(dims, opt);
    detail::SubsetSearch search(dims, params);
    for (int k = 0; k <= dims.cells(); ++k)
        if (auto found = search.find(k)) return {k, std::move(*found)};
    throw infeasible("no dominating set exists");  // unreachable: the full vertex set dominates
}

/// True iff `claimed` dominates and no smaller dominating set exists. Supersets
/// of dominating sets dominate, so checking size |claimed|-1 is enough.
[[nodiscard]] inline bool verify_minimum(const GridDims& dims, const BroadcastParams& params,
                                         const TowerSet& claimed, const OracleOptions& opt = {}) {
    detail::check_oracle_size(dims, opt);
    if (!is_dominating(dims, params, claimed)) return false;
    if (claimed.empty()) return true;
    detail::SubsetSearch search(dims, params);
    return !search.find(static_cast<int>(claimed.size()) - 1).has_value();
}

}  // namespace bdom
