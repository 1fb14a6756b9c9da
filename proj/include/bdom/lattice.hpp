#pragma once

// Upper-bound constructions from periodic lattice sets.
//
// P(i) is the preimage of i under (x,y) -> αx + βy mod p. The grid sits in
// the lattice with vertex (row, col) at x = row - 1 + x0, y = col - 1 + y0,
// and the halo Y_{m,n} extends it by h on every side. P(i) ∩ Y_{m,n},
// clamped into the grid and repaired at the corners, dominates G_{m,n}.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bdom/detail/arith.hpp"
#include "bdom/grid.hpp"
#include "bdom/solver.hpp"

namespace bdom {

struct LatticeSpec {
    BroadcastParams params;
    int p = 1;
    int alpha = 0;
    int beta = 0;
    int halo = 0;
    int x0 = 0;
    int y0 = 0;
    int residue = 0;

    [[nodiscard]] LatticeSpec with_residue(int i) const {
        if (i < 0 || i >= p) throw invalid_input("residue " + std::to_string(i) + " outside Z_" + std::to_string(p));
        LatticeSpec s = *this;
        s.residue = i;
        return s;
    }
};

/// Built-in specs for (2,2), (3,1), (3,2) and (3,3), residue 0.
[[nodiscard]] inline LatticeSpec catalog(const BroadcastParams& params) {
    if (params == BroadcastParams{2, 2}) return {params, 3, 1, 2, 1, 1, 1, 0};
    if (params == BroadcastParams{3, 1}) return {params, 13, 4, 7, 2, 2, 2, 0};
    if (params == BroadcastParams{3, 2}) return {params, 8, 1, 3, 1, 1, 1, 0};
    if (params == BroadcastParams{3, 3}) return {params, 5, 1, 3, 1, 1, 1, 0};
    throw invalid_input("no lattice construction for " + to_string(params));
}

[[nodiscard]] inline bool in_class(const LatticeSpec& spec, long x, long y) {
    return detail::floor_mod(spec.alpha * x + spec.beta * y, spec.p) == spec.residue;
}

/// Grid coordinates of the lattice point (x, y).
[[nodiscard]] inline Vertex from_lattice(const LatticeSpec& spec, long x, long y) {
    return {static_cast<int>(x - spec.x0 + 1), static_cast<int>(y - spec.y0 + 1)};
}

/// P(i) ∩ Y_{m,n} in grid coordinates; points in the halo fall outside 1..m x 1..n.
[[nodiscard]] inline TowerSet intersect_halo(const LatticeSpec& spec, const GridDims& dims) {
    std::vector<Vertex> out;
    const int h = spec.halo;
    for (int row = 1 - h; row <= dims.rows + h; ++row)
        for (int col = 1 - h; col <= dims.cols + h; ++col)
            if (in_class(spec, row - 1 + spec.x0, col - 1 + spec.y0)) out.push_back({row, col});
    return TowerSet(std::move(out));
}

// Exception tables exactly as printed.
inline const std::set<std::tuple<int, int, int>>& psi_table() {
    static const std::set<std::tuple<int, int, int>> psi{
        {0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 2, 0}, {0, 2, 1}, {1, 0, 0},
        {1, 0, 1}, {1, 0, 2}, {1, 1, 0}, {1, 1, 1}, {1, 1, 2}, {1, 2, 0}, {1, 2, 1},
        {1, 2, 2}, {2, 0, 0}, {2, 0, 2}, {2, 1, 0}, {2, 1, 1}, {2, 1, 2}, {2, 2, 0}};
    return psi;
}

inline const std::set<std::pair<int, int>>& phi_table() {
    static const std::set<std::pair<int, int>> phi{{2, 7}, {3, 9},  {4, 4}, {4, 7}, {4, 10}, {6, 7},
                                                   {6, 9}, {6, 11}, {7, 2}, {7, 4}, {7, 6},  {9, 3},
                                                   {9, 6}, {9, 9},  {10, 4}, {11, 6}};
    return phi;
}

inline const std::set<std::pair<int, int>>& b_table() {
    static const std::set<std::pair<int, int>> b{{0, 0}, {0, 4}, {0, 6}, {2, 6}, {4, 4}, {4, 6},
                                                 {4, 0}, {6, 6}, {6, 0}, {6, 2}, {6, 4}};
    return b;
}

inline const std::set<std::pair<int, int>>& c_table() {
    static const std::set<std::pair<int, int>> c{{0, 2}, {2, 2}, {2, 4}, {2, 0}, {4, 2}};
    return c;
}

struct IntersectionCount {
    long count = 0;
    /// Value of the counting lemma, when one covers this spec.
    std::optional<long> closed_form;
};

/// |P(i) ∩ Y_{m,n}|, cross-checked against the (2,2) counting lemma.
/// A disagreement throws std::logic_error.
[[nodiscard]] inline IntersectionCount count_intersection(const LatticeSpec& spec, const GridDims& dims) {
    IntersectionCount out{static_cast<long>(intersect_halo(spec, dims).size()), std::nullopt};
    if (spec.params == BroadcastParams{2, 2}) {
        const long total = static_cast<long>(dims.rows + 2) * (dims.cols + 2);
        const bool up = psi_table().count({dims.rows % 3, dims.cols % 3, spec.residue}) > 0;
        out.closed_form = up ? detail::ceil_div(total, 3) : detail::floor_div(total, 3);
        if (*out.closed_form != out.count)
            throw std::logic_error("(2,2) counting lemma disagrees with enumeration at " + std::to_string(dims.rows) +
                                   "x" + std::to_string(dims.cols) + ", i=" + std::to_string(spec.residue));
    }
    return out;
}

/// min over i of |G_{m,n} ∩ P(i)| for the (3,1) lattice, checked against
/// floor(mn/13) - [ (m mod 13, n mod 13) in Φ ]. Throws std::logic_error on a mismatch.
[[nodiscard]] inline IntersectionCount min_class_count_31(const GridDims& dims) {
    const LatticeSpec base = catalog({3, 1});
    long best = -1;
    for (int i = 0; i < base.p; ++i) {
        const auto spec = base.with_residue(i);
        long c = 0;
        for (int row = 1; row <= dims.rows; ++row)
            for (int col = 1; col <= dims.cols; ++col) c += in_class(spec, row - 1 + spec.x0, col - 1 + spec.y0);
        best = best < 0 ? c : std::min(best, c);
    }
    const long mn = static_cast<long>(dims.rows) * dims.cols;
    const long expect = mn / 13 - (phi_table().count({dims.rows % 13, dims.cols % 13}) ? 1 : 0);
    if (best != expect)
        throw std::logic_error("(3,1) counting lemma disagrees with enumeration at " + std::to_string(dims.rows) +
                               "x" + std::to_string(dims.cols));
    return {best, expect};
}

/// Moves each tower to the nearest grid vertex (coordinate clamp); repeats collapse.
[[nodiscard]] inline TowerSet clamp_into_grid(const GridDims& dims, const TowerSet& halo_set) {
    std::vector<Vertex> out;
    out.reserve(halo_set.size());
    for (const auto& v : halo_set)
        out.push_back({std::clamp(v.row, 1, dims.rows), std::clamp(v.col, 1, dims.cols)});
    return TowerSet::deduplicated(std::move(out));
}

struct CornerSaving {
    std::string corner;
    int removed = 0;
    int added = 0;
    [[nodiscard]] int saving() const { return removed - added; }
};

struct CornerRepair {
    TowerSet towers;
    std::vector<CornerSaving> corners;
    [[nodiscard]] int total_saving() const {
        int s = 0;
        for (const auto& c : corners) s += c.saving();
        return s;
    }
};

struct CornerOptions {
    /// Side of the block emptied at each corner. 0 means p, shrunk so that
    /// the four blocks stay disjoint.
    int window = 0;
    /// Sweeps over the four corners, stopping early once one saves nothing.
    int passes = 3;
    SolverOptions solver;
    /// construct_bound_set also tries every larger window up to this side
    /// (blocks may then overlap) and keeps the smallest result.
    int max_window = 0;
};

[[nodiscard]] inline int corner_window(const BroadcastParams& params, const GridDims& dims, const CornerOptions& opt) {
    if (opt.window > 0) return std::min({opt.window, dims.rows, dims.cols});
    return std::max(1, std::min({catalog(params).p, dims.rows / 2, dims.cols / 2}));
}

namespace detail {

struct CornerBox {
    const char* name;
    int row0;
    int col0;
    int rows;
    int cols;
    [[nodiscard]] bool contains(const Vertex& v) const {
        return v.row >= row0 && v.row < row0 + rows && v.col >= col0 && v.col < col0 + cols;
    }
};

/// The four w x w corner blocks and their regions (block plus a margin of t-1).
inline std::vector<std::pair<CornerBox, CornerBox>> corner_boxes(const GridDims& dims, int w, int t) {
    const int side_r = std::min(dims.rows, w + t - 1);
    const int side_c = std::min(dims.cols, w + t - 1);
    std::vector<std::pair<CornerBox, CornerBox>> out;
    for (auto [name, bottom, right] : {std::tuple{"NW", false, false}, std::tuple{"NE", false, true},
                                       std::tuple{"SW", true, false}, std::tuple{"SE", true, true}}) {
        const CornerBox block{name, bottom ? dims.rows - w + 1 : 1, right ? dims.cols - w + 1 : 1, w, w};
        const CornerBox region{name, bottom ? dims.rows - side_r + 1 : 1, right ? dims.cols - side_c + 1 : 1, side_r,
                               side_c};
        out.emplace_back(block, region);
    }
    return out;
}

}  // namespace detail

/// Empties a w x w block at each corner in turn and refills it optimally
/// with solve_with_demand on the block plus a margin of t-1. Towers outside
/// the block stay put; a corner is only rewritten when that saves towers.
[[nodiscard]] inline CornerRepair corner_repair(const BroadcastParams& params, const GridDims& dims,
                                                const TowerSet& towers, const CornerOptions& opt = {}) {
    if (!is_dominating(dims, params, towers)) throw invalid_input("corner repair needs a dominating set");
    const int w = corner_window(params, dims, opt);
    const auto boxes = detail::corner_boxes(dims, w, params.t);

    CornerRepair out{towers, {}};
    for (const auto& [block, region] : boxes) out.corners.push_back({block.name, 0, 0});

    for (int pass = 0; pass < std::max(1, opt.passes); ++pass) {
        bool improved = false;
        for (std::size_t k = 0; k < boxes.size(); ++k) {
            const auto& [block, region] = boxes[k];
            std::vector<Vertex> outside;
            std::vector<Vertex> frozen;
            int removed = 0;
            for (const auto& v : out.towers) {
                if (block.contains(v)) ++removed;
                else if (region.contains(v)) frozen.push_back({v.row - region.row0 + 1, v.col - region.col0 + 1});
                else outside.push_back(v);
            }

            const GridDims local(region.rows, region.cols);
            const auto heard = reception_from(dims, params.t, TowerSet(outside));
            DemandField demand(local);
            for (int i = 1; i <= region.rows; ++i)
                for (int j = 1; j <= region.cols; ++j)
                    demand.at(i, j) =
                        std::clamp(params.r - heard.at(i + region.row0 - 1, j + region.col0 - 1), 0, params.r);

            const Solution refill = solve_with_demand(local, params, demand, TowerSet(frozen), opt.solver);
            if (refill.gamma >= removed) continue;
            improved = true;
            out.corners[k].removed += removed;
            out.corners[k].added += refill.gamma;
            std::vector<Vertex> next = std::move(outside);
            for (const auto& v : frozen) next.push_back({v.row + region.row0 - 1, v.col + region.col0 - 1});
            for (const auto& v : refill.witness) next.push_back({v.row + region.row0 - 1, v.col + region.col0 - 1});
            out.towers = TowerSet(std::move(next));
        }
        if (!improved) break;
    }
    if (!is_dominating(dims, params, out.towers)) throw std::logic_error("corner repair broke domination");
    return out;
}

struct BoundConstruction {
    TowerSet towers;
    int residue = 0;
    int window = 0;
    std::size_t halo_size = 0;
    std::size_t clamped_size = 0;
    /// Per corner: halo points that clamp into the corner block, against towers left there.
    std::vector<CornerSaving> corners;
    /// Verified size per residue class, in residue order (0 if the clamped set failed to dominate).
    std::vector<std::size_t> class_sizes;
    [[nodiscard]] int total_saving() const { return static_cast<int>(halo_size) - static_cast<int>(towers.size()); }
};

/// Runs halo intersection, clamping and corner repair for every residue and
/// keeps the smallest verified result (ties: smallest residue).
[[nodiscard]] inline BoundConstruction construct_bound_set(const BroadcastParams& params, const GridDims& dims,
                                                           const CornerOptions& opt = {}) {
    const LatticeSpec base = catalog(params);
    const int w0 = corner_window(params, dims, opt);
    const int w1 = std::max(w0, std::min({opt.max_window, dims.rows, dims.cols}));
    std::optional<BoundConstruction> best;
    std::vector<std::size_t> sizes;
    for (int i = 0; i < base.p; ++i) {
        const auto halo = intersect_halo(base.with_residue(i), dims);
        const auto clamped = clamp_into_grid(dims, halo);
        if (!is_dominating(dims, params, clamped)) {
            sizes.push_back(0);
            continue;
        }
        std::optional<std::pair<CornerRepair, int>> pick;
        for (int w = w0; w <= w1; ++w) {
            CornerOptions o = opt;
            o.window = w;
            auto r = corner_repair(params, dims, clamped, o);
            if (!pick || r.towers.size() < pick->first.towers.size()) pick.emplace(std::move(r), w);
        }
        const auto& [repaired, w] = *pick;
        sizes.push_back(repaired.towers.size());
        if (best && repaired.towers.size() >= best->towers.size()) continue;

        BoundConstruction c{repaired.towers, i, w, halo.size(), clamped.size(), {}, {}};
        for (const auto& [block, region] : detail::corner_boxes(dims, w, params.t)) {
            CornerSaving s{block.name, 0, 0};
            for (const auto& v : halo)
                s.removed += block.contains({std::clamp(v.row, 1, dims.rows), std::clamp(v.col, 1, dims.cols)});
            for (const auto& v : repaired.towers) s.added += block.contains(v);
            c.corners.push_back(s);
        }
        best = std::move(c);
    }
    if (!best)
        throw std::logic_error("no residue class of the " + to_string(params) + " lattice dominates " +
                               std::to_string(dims.rows) + "x" + std::to_string(dims.cols));
    best->class_sizes = std::move(sizes);
    return *best;
}

/// The printed upper-bound formula.
[[nodiscard]] inline long bound_formula(const BroadcastParams& params, const GridDims& dims) {
    using detail::ceil_div;
    using detail::floor_div;
    const long m = dims.rows, n = dims.cols;
    if (params == BroadcastParams{2, 2}) {
        if (m < 6 || n < 6) throw invalid_input("the (2,2) bound needs m,n >= 6");
        return ceil_div((m + 2) * (n + 2), 3) - (m % 3 == n % 3 ? 6 : 5);
    }
    if (params == BroadcastParams{3, 1}) {
        const bool special = phi_table().count({static_cast<int>((m + 4) % 13), static_cast<int>((n + 4) % 13)}) > 0;
        return floor_div((m + 4) * (n + 4), 13) - (special ? 5 : 4);
    }
    if (params == BroadcastParams{3, 2}) {
        const std::pair<int, int> key{static_cast<int>(m % 8), static_cast<int>(n % 8)};
        const int c = c_table().count(key) ? 3 : b_table().count(key) ? 2 : 1;
        return floor_div((m + 2) * (n + 2), 8) - c;
    }
    if (params == BroadcastParams{3, 3}) return floor_div((m + 2) * (n + 2), 5) - 4;
    throw invalid_input("no bound formula for " + to_string(params));
}

}  // namespace bdom
