#pragma once

// Column-granular frontier of the left-to-right sweep.
//
// After columns 1..j are decided, a column is still open if it lies within
// t-1 columns of an undecided one. The frontier keeps, capped at r, the
// reception already accumulated by
//   pending:  the last t-1 decided columns (j-t+2 .. j), oldest first
//   incoming: the next t-1 undecided columns (j+1 .. j+t-1), which already
//             hear towers placed in the pending columns.
// Both parts are needed: future towers only add to these values, so the
// pair is a sufficient statistic for optimal continuation.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "bdom/grid.hpp"

namespace bdom {

/// Rows holding a tower in one column; bit i is row i+1.
using ColumnMask = std::uint32_t;

struct FrontierState {
    int rows = 0;
    int t = 1;
    std::vector<std::vector<int>> pending;
    std::vector<std::vector<int>> incoming;

    FrontierState() = default;
    FrontierState(int m, int t_) : rows(m), t(t_) {
        pending.assign(static_cast<std::size_t>(t_ - 1), std::vector<int>(static_cast<std::size_t>(m), 0));
        incoming = pending;
    }

    /// State with the given pending columns and nothing heard yet by the incoming ones.
    static FrontierState from_pending(int m, int t_, std::vector<std::vector<int>> cols) {
        FrontierState s(m, t_);
        if (cols.size() != s.pending.size())
            throw invalid_input("frontier needs exactly t-1 pending columns");
        for (const auto& c : cols)
            if (static_cast<int>(c.size()) != m) throw invalid_input("pending column has wrong height");
        s.pending = std::move(cols);
        return s;
    }

    bool operator==(const FrontierState&) const = default;
};

struct TransitionResult {
    FrontierState next;
    bool finalized_ok = false;
};

/// Decide one more column with towers at `mask`. The column that leaves the
/// window is finalized: finalized_ok tells whether all its vertices reached r.
[[nodiscard]] inline TransitionResult dp_transition(const FrontierState& state, ColumnMask mask,
                                                    const BroadcastParams& params, int rows) {
    const int t = params.t;
    const int r = params.r;
    if (state.rows != rows || state.t != t) throw invalid_input("frontier does not match grid");
    if (rows < 32 && (mask >> rows) != 0) throw invalid_input("column mask sets rows outside the grid");

    // window[0..t-2] pending, window[t-1] the new column, window[t..2t-2] future columns
    std::vector<std::vector<int>> window;
    window.reserve(static_cast<std::size_t>(2 * t - 1));
    for (const auto& c : state.pending) window.push_back(c);
    window.push_back(state.incoming.empty() ? std::vector<int>(static_cast<std::size_t>(rows), 0)
                                            : state.incoming.front());
    for (std::size_t i = 1; i < state.incoming.size(); ++i) window.push_back(state.incoming[i]);
    window.emplace_back(static_cast<std::size_t>(rows), 0);
    if (t == 1) window.pop_back();

    for (int a = 0; a < rows; ++a) {
        if (!((mask >> a) & 1U)) continue;
        for (int dc = -(t - 1); dc <= t - 1; ++dc) {
            auto& col = window[static_cast<std::size_t>(t - 1 + dc)];
            for (int b = 0; b < rows; ++b) {
                const int s = signal(t, std::abs(dc) + std::abs(a - b));
                if (s > 0) col[static_cast<std::size_t>(b)] = std::min(r, col[static_cast<std::size_t>(b)] + s);
            }
        }
    }

    TransitionResult out;
    const auto& oldest = window.front();
    out.finalized_ok = std::all_of(oldest.begin(), oldest.end(), [&](int v) { return v >= r; });
    out.next = FrontierState(rows, t);
    for (int i = 0; i < t - 1; ++i) {
        out.next.pending[static_cast<std::size_t>(i)] = window[static_cast<std::size_t>(i + 1)];
        out.next.incoming[static_cast<std::size_t>(i)] = window[static_cast<std::size_t>(t + i)];
    }
    return out;
}

}  // namespace bdom
