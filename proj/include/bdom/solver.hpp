#pragma once

// Exact broadcast domination numbers by a frontier sweep.
//
// The sweep visits cells in column-major order (the grid is transposed first
// when that makes columns shorter). Deciding one cell at a time keeps two
// transitions per state. The state is the capped reception of the
// 2(t-1)m cells centred on the current cell, the cell-granular form of the
// pending/incoming pair in frontier.hpp. Each value is capped at the demand
// of its cell, so satisfied cells all look alike.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "bdom/detail/state_table.hpp"
#include "bdom/frontier.hpp"
#include "bdom/grid.hpp"

namespace bdom {

struct SolverOptions {
    std::size_t max_states = 20'000'000;
    /// Cap frontier values at the demand (false keeps exact sums, for testing).
    bool cap_reception = true;
    /// Sweep along the longer side.
    bool orient = true;
};

struct Solution {
    int gamma = 0;
    TowerSet witness;
    std::size_t peak_states = 0;
};

/// Required reception per vertex.
class DemandField {
public:
    DemandField() = default;
    explicit DemandField(const GridDims& dims, int value = 0)
        : dims_(dims), values_(static_cast<std::size_t>(dims.cells()), value) {}

    static DemandField uniform(const GridDims& dims, int r) { return DemandField(dims, r); }

    [[nodiscard]] const GridDims& dims() const { return dims_; }
    [[nodiscard]] int at(int row, int col) const { return values_[index(row, col)]; }
    int& at(int row, int col) { return values_[index(row, col)]; }
    [[nodiscard]] const std::vector<int>& values() const { return values_; }

private:
    [[nodiscard]] std::size_t index(int row, int col) const {
        if (row < 1 || row > dims_.rows || col < 1 || col > dims_.cols)
            throw invalid_input("demand lookup outside the grid");
        return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(dims_.cols) +
               static_cast<std::size_t>(col - 1);
    }

    GridDims dims_;
    std::vector<int> values_;
};

/// Largest reception a single vertex of the infinite grid can get when every vertex holds a tower.
[[nodiscard]] constexpr int max_reception(int t) {
    int total = t;
    for (int d = 1; d < t; ++d) total += 4 * d * (t - d);
    return total;
}

namespace detail {

/// Instance in sweep orientation: m rows per column, cells indexed c*m + row.
struct SweepProblem {
    int m = 0;
    int n = 0;
    int t = 1;
    std::vector<int> need;
    std::vector<int> cap;
    std::vector<char> allowed;
};

struct Contribution {
    int pos;
    int strength;
    int cap;
};

struct Footprint {
    Packed clear = 0;
    Packed set = 0;
    std::vector<Contribution> partial;
};

inline Solution run_sweep(const SweepProblem& p, const SolverOptions& opt) {
    const int m = p.m;
    const int n = p.n;
    const int t = p.t;
    const int total = m * n;
    if (m > 32) throw infeasible("sweep height " + std::to_string(m) + " exceeds 32 rows");

    Solution out;
    if (std::all_of(p.need.begin(), p.need.end(), [](int v) { return v == 0; })) return out;

    const int half = (t - 1) * m;
    const int width = 2 * half;
    const int maxcap = *std::max_element(p.cap.begin(), p.cap.end());
    const int bits = std::bit_width(static_cast<unsigned>(maxcap));
    if ((width + 1) * bits > 128)
        throw infeasible("frontier of " + std::to_string(width) + " cells at " + std::to_string(bits) +
                         " bits does not fit the state encoding");
    const Packed field = (Packed{1} << bits) - 1;

    auto cell_need = [&](long idx) { return idx >= 0 && idx < total ? p.need[idx] : 0; };

    // Broadcast footprint of a tower at each cell, as window positions relative
    // to the cell being decided (which sits at position `half`). Contributions
    // that reach the cap on their own become one mask-and-set.
    std::vector<Footprint> reach(static_cast<std::size_t>(total));
    for (int c = 0; c < n; ++c) {
        for (int a = 0; a < m; ++a) {
            auto& fp = reach[static_cast<std::size_t>(c * m + a)];
            for (int dc = -(t - 1); dc <= t - 1; ++dc) {
                if (c + dc < 0 || c + dc >= n) continue;
                for (int b = 0; b < m; ++b) {
                    const int s = signal(t, std::abs(dc) + std::abs(a - b));
                    const int idx = (c + dc) * m + b;
                    const int cap = p.cap[static_cast<std::size_t>(idx)];
                    if (s <= 0 || cap <= 0) continue;
                    const int pos = half + dc * m + (b - a);
                    if (s >= cap) {
                        fp.clear |= field << (pos * bits);
                        fp.set |= static_cast<Packed>(cap) << (pos * bits);
                    } else {
                        fp.partial.push_back({pos, s, cap});
                    }
                }
            }
            fp.clear = ~fp.clear;
        }
    }

    std::vector<StateEntry> layer{StateEntry{0, 0, 0, 0}};
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> trail;
    trail.reserve(static_cast<std::size_t>(n));
    StateTable table;
    double growth = 2.0;  // output/input size ratio of the previous cell

    for (int c = 0; c < n; ++c) {
        for (int a = 0; a < m; ++a) {
            const int k = c * m + a;
            const long leaving = static_cast<long>(k) - half;
            const int leaving_need = cell_need(leaving);
            const auto& footprint = reach[static_cast<std::size_t>(k)];
            const bool can_place = p.allowed[static_cast<std::size_t>(k)] != 0;

            const std::size_t before = layer.size();
            table.reset(static_cast<std::size_t>(static_cast<double>(before) * std::min(2.0, growth * 1.1)));
            for (const auto& e : layer) {
                if (static_cast<int>(e.state & field) >= leaving_need)
                    table.offer({e.state >> bits, e.cost, e.mask, e.origin});
                if (!can_place) continue;
                Packed s = (e.state & footprint.clear) | footprint.set;
                for (const auto& f : footprint.partial) {
                    const int shift = f.pos * bits;
                    const int v = static_cast<int>((s >> shift) & field);
                    const int nv = std::min(f.cap, v + f.strength);
                    s = (s & ~(field << shift)) | (static_cast<Packed>(nv) << shift);
                }
                if (static_cast<int>(s & field) >= leaving_need)
                    table.offer({s >> bits, e.cost + 1, e.mask | (1U << a), e.origin});
            }
            table.drain(layer);
            growth = static_cast<double>(layer.size()) / static_cast<double>(before);
            out.peak_states = std::max(out.peak_states, layer.size());
            if (layer.size() > opt.max_states)
                throw infeasible("frontier exceeded " + std::to_string(opt.max_states) + " states");
            if (layer.empty()) throw invalid_input("demand cannot be met by any tower placement");
        }

        std::sort(layer.begin(), layer.end(),
                  [](const StateEntry& x, const StateEntry& y) { return x.state < y.state; });
        auto& step = trail.emplace_back();
        step.reserve(layer.size());
        for (std::size_t i = 0; i < layer.size(); ++i) {
            step.emplace_back(layer[i].mask, layer[i].origin);
            layer[i].mask = 0;
            layer[i].origin = static_cast<std::uint32_t>(i);
        }
    }

    // The last `half` real cells are still in the window.
    const long first_open = static_cast<long>(total) - half;
    long best = -1;
    for (std::size_t i = 0; i < layer.size(); ++i) {
        bool ok = true;
        for (int q = 0; q < half && ok; ++q)
            ok = static_cast<int>((layer[i].state >> (q * bits)) & field) >= cell_need(first_open + q);
        if (ok && (best < 0 || layer[i].cost < layer[static_cast<std::size_t>(best)].cost))
            best = static_cast<long>(i);
    }
    if (best < 0) throw invalid_input("demand cannot be met by any tower placement");

    out.gamma = layer[static_cast<std::size_t>(best)].cost;
    std::vector<Vertex> towers;
    auto idx = static_cast<std::uint32_t>(best);
    for (int c = n - 1; c >= 0; --c) {
        const auto [mask, origin] = trail[static_cast<std::size_t>(c)][idx];
        for (int a = 0; a < m; ++a)
            if ((mask >> a) & 1U) towers.push_back({a + 1, c + 1});
        idx = origin;
    }
    out.witness = TowerSet(std::move(towers));
    return out;
}

inline Solution solve_oriented(const GridDims& dims, const BroadcastParams& params,
                               const DemandField& residual, const std::vector<char>& allowed_rowmajor,
                               const SolverOptions& opt) {
    const bool flip = opt.orient && dims.rows > dims.cols;
    SweepProblem p;
    p.m = flip ? dims.cols : dims.rows;
    p.n = flip ? dims.rows : dims.cols;
    p.t = params.t;
    const auto cells = static_cast<std::size_t>(dims.cells());
    p.need.resize(cells);
    p.cap.resize(cells);
    p.allowed.resize(cells);
    const int big = max_reception(params.t);
    for (int i = 1; i <= dims.rows; ++i) {
        for (int j = 1; j <= dims.cols; ++j) {
            const int row = flip ? j : i;
            const int col = flip ? i : j;
            const auto k = static_cast<std::size_t>((col - 1) * p.m + (row - 1));
            const int need = residual.at(i, j);
            p.need[k] = need;
            p.cap[k] = opt.cap_reception ? need : big;
            p.allowed[k] = allowed_rowmajor[static_cast<std::size_t>((i - 1) * dims.cols + (j - 1))];
        }
    }
    Solution s = run_sweep(p, opt);
    if (flip) s.witness = s.witness.transposed();
    return s;
}

}  // namespace detail

/// Minimum number of extra towers so that frozen ∪ witness meets `demand`
/// everywhere. Frozen cells cannot host another tower.
[[nodiscard]] inline Solution solve_with_demand(const GridDims& dims, const BroadcastParams& params,
                                                const DemandField& demand, const TowerSet& frozen,
                                                const SolverOptions& opt = {}) {
    if (demand.dims() != dims) throw invalid_input("demand field does not match grid");
    for (int v : demand.values())
        if (v < 0 || v > params.r) throw invalid_input("demand entries must lie in 0..r");
    require_resident(dims, frozen);

    const auto heard = reception_from(dims, params.t, frozen);
    DemandField residual(dims);
    std::vector<char> allowed(static_cast<std::size_t>(dims.cells()), 1);
    for (int i = 1; i <= dims.rows; ++i)
        for (int j = 1; j <= dims.cols; ++j) residual.at(i, j) = std::max(0, demand.at(i, j) - heard.at(i, j));
    for (const auto& v : frozen) allowed[static_cast<std::size_t>((v.row - 1) * dims.cols + (v.col - 1))] = 0;
    return detail::solve_oriented(dims, params, residual, allowed, opt);
}

[[nodiscard]] inline Solution solve(const GridDims& dims, const BroadcastParams& params,
                                    const SolverOptions& opt = {}) {
    return solve_with_demand(dims, params, DemandField::uniform(dims, params.r), {}, opt);
}

}  // namespace bdom
