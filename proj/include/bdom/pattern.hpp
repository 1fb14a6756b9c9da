#pragma once

// Column-count patterns c1-c2-...-ck, their placements in an m x k window,
// the two necessary properties of dominating subpatterns, and the minimal
// pattern search built on them.

#include <charconv>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "bdom/grid.hpp"

namespace bdom {

struct Pattern {
    std::vector<int> counts;

    [[nodiscard]] int length() const { return static_cast<int>(counts.size()); }
    [[nodiscard]] int total() const { return std::accumulate(counts.begin(), counts.end(), 0); }
    bool operator==(const Pattern&) const = default;

    /// "2-1-3" -> {2,1,3}
    static Pattern parse(std::string_view text) {
        Pattern p;
        std::size_t pos = 0;
        while (true) {
            const auto dash = text.find('-', pos);
            const auto piece = text.substr(pos, dash == std::string_view::npos ? text.size() - pos : dash - pos);
            int value = 0;
            const auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
            if (piece.empty() || ec != std::errc{} || end != piece.data() + piece.size() || value < 0)
                throw invalid_input("malformed pattern \"" + std::string(text) + "\"");
            p.counts.push_back(value);
            if (dash == std::string_view::npos) break;
            pos = dash + 1;
        }
        return p;
    }

    [[nodiscard]] std::string str() const {
        std::string out;
        for (std::size_t j = 0; j < counts.size(); ++j) {
            if (j) out += '-';
            out += std::to_string(counts[j]);
        }
        return out;
    }

    void validate(int m) const {
        if (counts.empty()) throw invalid_input("pattern must have at least one column");
        for (int c : counts)
            if (c < 0 || c > m)
                throw invalid_input("pattern " + str() + " does not fit " + std::to_string(m) + " rows");
    }
};

/// Per-column count pattern of a tower set on an m x n grid.
[[nodiscard]] inline Pattern column_pattern(const GridDims& dims, const TowerSet& towers) {
    Pattern p{std::vector<int>(static_cast<std::size_t>(dims.cols), 0)};
    for (const auto& v : towers) ++p.counts[static_cast<std::size_t>(v.col - 1)];
    return p;
}

/// Reception each column of a k-wide window must get from the window alone.
/// Columns t..k+1-t cannot hear anything outside and need r; the ℓ-th column
/// in from either edge of that band hears at most ℓ from outside.
[[nodiscard]] inline std::vector<int> column_requirements(int k, const BroadcastParams& params) {
    const int t = params.t;
    if (k < t) throw invalid_input("window of width " + std::to_string(k) + " is too narrow for t=" + std::to_string(t));
    std::vector<int> req(static_cast<std::size_t>(k), 0);
    auto demand = [&](int col, int value) {
        if (col >= 1 && col <= k) req[static_cast<std::size_t>(col - 1)] = std::max(req[static_cast<std::size_t>(col - 1)], value);
    };
    for (int j = t; j <= k + 1 - t; ++j) demand(j, params.r);
    for (int l = 0; l < params.r; ++l) {
        demand(t - l, params.r - l);
        demand(k + 1 - t + l, params.r - l);
    }
    return req;
}

[[nodiscard]] inline bool check_subpattern_properties(int m, const BroadcastParams& params, const TowerSet& placement,
                                                      int k) {
    const auto req = column_requirements(k, params);
    const GridDims window(m, k);
    require_resident(window, placement);
    const auto field = reception_from(window, params.t, placement);
    for (int j = 1; j <= k; ++j)
        for (int i = 1; i <= m; ++i)
            if (field.at(i, j) < req[static_cast<std::size_t>(j - 1)]) return false;
    return true;
}

namespace detail {

/// All c-element row subsets of 1..m as bitmasks, in lexicographic order of the row lists.
inline std::vector<std::vector<int>> row_choices(int m, int c) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == c) {
            out.push_back(cur);
            return;
        }
        for (int row = from; row <= m - (c - static_cast<int>(cur.size())) + 1; ++row) {
            cur.push_back(row);
            rec(row + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

/// Depth-first walk over placements, column 1 varying slowest. With
/// `prune`, a column is tested against its requirement as soon as no later
/// column can reach it.
inline void walk_placements(int m, const Pattern& pattern, const BroadcastParams* prune,
                            const std::function<void(const TowerSet&)>& emit) {
    pattern.validate(m);
    const int k = pattern.length();
    std::vector<std::vector<std::vector<int>>> choices;
    for (int c : pattern.counts) choices.push_back(row_choices(m, c));
    const std::vector<int> req = prune ? column_requirements(k, *prune) : std::vector<int>();
    const int t = prune ? prune->t : 1;
    const GridDims window(m, k);
    ReceptionField field(window);
    std::vector<Vertex> placed;

    auto column_ok = [&](int col) {
        for (int i = 1; i <= m; ++i)
            if (field.at(i, col) < req[static_cast<std::size_t>(col - 1)]) return false;
        return true;
    };
    auto shift = [&](int col, const std::vector<int>& rows, int sign) {
        for (int row : rows)
            for (int i = 1; i <= m; ++i)
                for (int j = std::max(1, col - t + 1); j <= std::min(k, col + t - 1); ++j)
                    field.at(i, j) += sign * signal(t, distance({i, j}, {row, col}));
    };

    std::function<void(int)> rec = [&](int col) {
        if (col > k) {
            if (prune)
                for (int j = std::max(1, k - t + 2); j <= k; ++j)
                    if (!column_ok(j)) return;
            emit(TowerSet(placed));
            return;
        }
        for (const auto& rows : choices[static_cast<std::size_t>(col - 1)]) {
            if (prune) shift(col, rows, +1);
            for (int row : rows) placed.push_back({row, col});
            const int closed = col - t + 1;
            if (!prune || closed < 1 || column_ok(closed)) rec(col + 1);
            placed.resize(placed.size() - rows.size());
            if (prune) shift(col, rows, -1);
        }
    };
    rec(1);
}

}  // namespace detail

/// Every placement of `pattern` in an m x k window, column 1 varying slowest
/// and each column's rows in lexicographic order.
inline void for_each_pattern_placement(int m, const Pattern& pattern,
                                       const std::function<void(const TowerSet&)>& emit) {
    detail::walk_placements(m, pattern, nullptr, emit);
}

[[nodiscard]] inline std::vector<TowerSet> enumerate_pattern_placements(int m, const Pattern& pattern) {
    std::vector<TowerSet> out;
    for_each_pattern_placement(m, pattern, [&](const TowerSet& s) { out.push_back(s); });
    return out;
}

/// Placements satisfying both necessary properties; empty refutes the pattern.
[[nodiscard]] inline std::vector<TowerSet> mps_search(int m, const BroadcastParams& params, const Pattern& pattern) {
    std::vector<TowerSet> out;
    detail::walk_placements(m, pattern, &params, [&](const TowerSet& s) { out.push_back(s); });
    return out;
}

struct PatternVerdict {
    Pattern pattern;
    std::size_t survivors = 0;
};

struct RefutationReport {
    Pattern reference;
    std::vector<PatternVerdict> verdicts;
    /// Every same-length pattern with a smaller total was refuted.
    bool minimal = true;
};

[[nodiscard]] inline RefutationReport refute_smaller_patterns(int m, const BroadcastParams& params,
                                                              const Pattern& reference) {
    reference.validate(m);
    const int k = reference.length();
    const int limit = reference.total();
    RefutationReport report{reference, {}, true};
    Pattern cur{std::vector<int>(static_cast<std::size_t>(k), 0)};
    std::function<void(int, int)> rec = [&](int j, int sum) {
        if (j == k) {
            const auto found = mps_search(m, params, cur);
            report.verdicts.push_back({cur, found.size()});
            if (!found.empty()) report.minimal = false;
            return;
        }
        for (int c = 0; c <= m && sum + c < limit; ++c) {
            cur.counts[static_cast<std::size_t>(j)] = c;
            rec(j + 1, sum + c);
        }
    };
    rec(0, 0);
    return report;
}

}  // namespace bdom
