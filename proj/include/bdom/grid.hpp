#pragma once

// Grid graphs, broadcast towers and reception strengths.
//
// Coordinates are 1-based: row 1 is the top row, column 1 the leftmost
// column. Distances are Manhattan distances, which coincide with
// shortest-path distances in a full rectangular grid graph.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdom {

/// Malformed or out-of-range input (bad dimensions, tower outside the grid, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The exact solver refused an instance whose state space exceeds its budget.
class infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GridDims {
    int rows = 1;
    int cols = 1;

    GridDims() = default;
    GridDims(int m, int n) : rows(m), cols(n) {
        if (m < 1 || n < 1)
            throw invalid_input("grid dimensions must be positive, got " + std::to_string(m) + "x" +
                                std::to_string(n));
    }

    [[nodiscard]] int cells() const { return rows * cols; }
    [[nodiscard]] GridDims transposed() const { return {cols, rows}; }
    bool operator==(const GridDims&) const = default;
};

/// Transmission strength t and required reception r, with 1 <= r <= t.
struct BroadcastParams {
    int t = 1;
    int r = 1;

    BroadcastParams() = default;
    BroadcastParams(int t_, int r_) : t(t_), r(r_) {
        if (r_ < 1 || t_ < r_)
            throw invalid_input("broadcast parameters need 1 <= r <= t, got (t,r)=(" +
                                std::to_string(t_) + "," + std::to_string(r_) + ")");
    }
    bool operator==(const BroadcastParams&) const = default;
};

inline std::string to_string(const BroadcastParams& p) {
    return "(" + std::to_string(p.t) + "," + std::to_string(p.r) + ")";
}

struct Vertex {
    int row = 0;
    int col = 0;

    auto operator<=>(const Vertex&) const = default;
    [[nodiscard]] Vertex transposed() const { return {col, row}; }
};

inline std::string to_string(const Vertex& v) {
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

[[nodiscard]] inline int distance(const Vertex& u, const Vertex& v) {
    return std::abs(u.row - v.row) + std::abs(u.col - v.col);
}

[[nodiscard]] inline bool contains(const GridDims& dims, const Vertex& v) {
    return v.row >= 1 && v.row <= dims.rows && v.col >= 1 && v.col <= dims.cols;
}

/// Strength received at distance d from a single tower.
[[nodiscard]] constexpr int signal(int t, int d) { return d < t ? t - d : 0; }

/// A set of tower positions, kept sorted in row-major order without duplicates.
class TowerSet {
public:
    using const_iterator = std::vector<Vertex>::const_iterator;

    TowerSet() = default;
    TowerSet(std::initializer_list<Vertex> vs) : TowerSet(std::vector<Vertex>(vs)) {}

    /// Throws invalid_input on a repeated position.
    explicit TowerSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
        std::sort(items_.begin(), items_.end());
        auto dup = std::adjacent_find(items_.begin(), items_.end());
        if (dup != items_.end()) throw invalid_input("duplicate tower at " + to_string(*dup));
    }

    /// Builds a set from positions that may repeat; repeats collapse.
    static TowerSet deduplicated(std::vector<Vertex> vs) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        TowerSet s;
        s.items_ = std::move(vs);
        return s;
    }

    /// Returns false if the position was already present.
    bool insert(const Vertex& v) {
        auto it = std::lower_bound(items_.begin(), items_.end(), v);
        if (it != items_.end() && *it == v) return false;
        items_.insert(it, v);
        return true;
    }

    bool erase(const Vertex& v) {
        auto it = std::lower_bound(items_.begin(), items_.end(), v);
        if (it == items_.end() || *it != v) return false;
        items_.erase(it);
        return true;
    }

    [[nodiscard]] bool contains(const Vertex& v) const {
        return std::binary_search(items_.begin(), items_.end(), v);
    }

    [[nodiscard]] std::size_t size() const { return items_.size(); }
    [[nodiscard]] bool empty() const { return items_.empty(); }
    [[nodiscard]] const_iterator begin() const { return items_.begin(); }
    [[nodiscard]] const_iterator end() const { return items_.end(); }
    [[nodiscard]] const std::vector<Vertex>& vertices() const { return items_; }

    [[nodiscard]] TowerSet transposed() const {
        std::vector<Vertex> out;
        out.reserve(items_.size());
        for (const auto& v : items_) out.push_back(v.transposed());
        return TowerSet(std::move(out));
    }

    /// Mirror across the horizontal midline of an m-row grid.
    [[nodiscard]] TowerSet flipped_vertically(int rows) const {
        std::vector<Vertex> out;
        out.reserve(items_.size());
        for (const auto& v : items_) out.push_back({rows + 1 - v.row, v.col});
        return TowerSet(std::move(out));
    }

    /// Shift every tower by (drow, dcol).
    [[nodiscard]] TowerSet translated(int drow, int dcol) const {
        std::vector<Vertex> out;
        out.reserve(items_.size());
        for (const auto& v : items_) out.push_back({v.row + drow, v.col + dcol});
        return TowerSet(std::move(out));
    }

    bool operator==(const TowerSet&) const = default;

private:
    std::vector<Vertex> items_;
};

inline void require_resident(const GridDims& dims, const TowerSet& towers) {
    for (const auto& v : towers)
        if (!contains(dims, v))
            throw invalid_input("tower " + to_string(v) + " lies outside the " +
                                std::to_string(dims.rows) + "x" + std::to_string(dims.cols) +
                                " grid");
}

/// Accumulated reception strength of every grid vertex.
class ReceptionField {
public:
    ReceptionField() = default;
    explicit ReceptionField(const GridDims& dims)
        : dims_(dims), values_(static_cast<std::size_t>(dims.cells()), 0) {}

    [[nodiscard]] const GridDims& dims() const { return dims_; }
    [[nodiscard]] int at(int row, int col) const { return values_[index(row, col)]; }
    [[nodiscard]] int at(const Vertex& v) const { return at(v.row, v.col); }
    int& at(int row, int col) { return values_[index(row, col)]; }
    [[nodiscard]] const std::vector<int>& values() const { return values_; }

    [[nodiscard]] ReceptionField transposed() const {
        ReceptionField out(dims_.transposed());
        for (int i = 1; i <= dims_.rows; ++i)
            for (int j = 1; j <= dims_.cols; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    bool operator==(const ReceptionField&) const = default;

private:
    [[nodiscard]] std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(dims_.cols) +
               static_cast<std::size_t>(col - 1);
    }

    GridDims dims_;
    std::vector<int> values_;
};

/// Adds the broadcast of one tower (which may lie outside the grid) to a field.
inline void add_broadcast(ReceptionField& field, int t, const Vertex& tower) {
    const auto& d = field.dims();
    const int reach = t - 1;
    for (int i = std::max(1, tower.row - reach); i <= std::min(d.rows, tower.row + reach); ++i) {
        const int left = reach - std::abs(i - tower.row);
        for (int j = std::max(1, tower.col - left); j <= std::min(d.cols, tower.col + left); ++j)
            field.at(i, j) += signal(t, distance({i, j}, tower));
    }
}

/// Reception from towers anywhere in the plane, restricted to the grid.
[[nodiscard]] inline ReceptionField reception_from(const GridDims& dims, int t,
                                                   const TowerSet& towers) {
    ReceptionField field(dims);
    for (const auto& v : towers) add_broadcast(field, t, v);
    return field;
}

[[nodiscard]] inline ReceptionField reception_field(const GridDims& dims,
                                                    const BroadcastParams& params,
                                                    const TowerSet& towers) {
    require_resident(dims, towers);
    return reception_from(dims, params.t, towers);
}

/// Grid vertices whose reception falls short of r, in row-major order.
[[nodiscard]] inline std::vector<Vertex> deficient_vertices(const GridDims& dims,
                                                            const BroadcastParams& params,
                                                            const TowerSet& towers) {
    const auto field = reception_field(dims, params, towers);
    std::vector<Vertex> out;
    for (int i = 1; i <= dims.rows; ++i)
        for (int j = 1; j <= dims.cols; ++j)
            if (field.at(i, j) < params.r) out.push_back({i, j});
    return out;
}

[[nodiscard]] inline bool is_dominating(const GridDims& dims, const BroadcastParams& params,
                                        const TowerSet& towers) {
    const auto field = reception_field(dims, params, towers);
    return std::all_of(field.values().begin(), field.values().end(),
                       [&](int v) { return v >= params.r; });
}

/// Fixed-width text picture: towers as "[d]", other vertices as " d ".
[[nodiscard]] inline std::string render_ascii(const GridDims& dims, const TowerSet& towers,
                                              const ReceptionField& field) {
    if (field.dims() != dims) throw invalid_input("reception field does not match grid");
    int width = 1;
    for (int v : field.values()) width = std::max(width, static_cast<int>(std::to_string(v).size()));

    std::ostringstream out;
    for (int i = 1; i <= dims.rows; ++i) {
        std::string line;
        for (int j = 1; j <= dims.cols; ++j) {
            std::string digits = std::to_string(field.at(i, j));
            digits.insert(0, static_cast<std::size_t>(width) - digits.size(), ' ');
            const bool tower = towers.contains({i, j});
            line += (tower ? "[" : " ") + digits + (tower ? "]" : " ");
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

}  // namespace bdom
