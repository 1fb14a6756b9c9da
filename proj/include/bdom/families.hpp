#pragma once

// Explicit dominating sets D_n for narrow grids and the closed-form sizes
// they realize. Each construction is a list of columns, each column the set
// of rows (1 = top) that hold a tower.

#include <optional>
#include <string>
#include <vector>

#include "bdom/detail/arith.hpp"
#include "bdom/grid.hpp"

namespace bdom {

struct FamilyId {
    BroadcastParams params;
    int width = 3;

    FamilyId() = default;
    FamilyId(BroadcastParams p, int m) : params(p), width(m) {
        const int t = p.t, r = p.r;
        const bool known = (t == 2 && r == 2 && m >= 3 && m <= 5) || (t == 3 && r == 1 && (m == 3 || m == 4)) ||
                           (t == 3 && r == 2 && (m == 3 || m == 4));
        if (!known) throw invalid_input("no family for " + to_string(p) + " with " + std::to_string(m) + " rows");
    }
    bool operator==(const FamilyId&) const = default;
};

[[nodiscard]] inline std::vector<FamilyId> all_families() {
    return {{{2, 2}, 3}, {{2, 2}, 4}, {{2, 2}, 5}, {{3, 1}, 3}, {{3, 1}, 4}, {{3, 2}, 3}, {{3, 2}, 4}};
}

inline std::string to_string(const FamilyId& f) { return to_string(f.params) + "x" + std::to_string(f.width); }

namespace detail {

using Columns = std::vector<std::vector<int>>;

inline Columns flipped(const Columns& cols, int m) {
    Columns out = cols;
    for (auto& c : out)
        for (auto& row : c) row = m + 1 - row;
    return out;
}

inline void append(Columns& dst, const Columns& src) { dst.insert(dst.end(), src.begin(), src.end()); }

inline Columns family_22_3(int n) {
    Columns cols{{2}};
    const Columns block{{1, 3}, {2}, {2}};
    const int len = n - 1;
    int q = 0;
    Columns tail;
    switch (len % 3) {
        case 2: q = (len - 2) / 3; tail = {{1, 3}, {2}}; break;
        case 0: q = (len - 3) / 3; tail = {{1, 3}, {1, 3}, {2}}; break;
        default: q = (len - 4) / 3; tail = {{1, 3}, {2}, {1, 3}, {2}}; break;
    }
    for (int i = 0; i < q; ++i) append(cols, block);
    append(cols, tail);
    return cols;
}

inline Columns family_22_4(int n) {
    switch (n) {
        case 4: return {{2, 4}, {1, 4}, {1, 3}, {2, 4}};
        case 5: return {{2, 4}, {1, 4}, {1, 3}, {1, 4}, {2, 4}};
        case 6: return {{2, 4}, {1, 4}, {1, 3}, {1, 3}, {1, 4}, {2, 4}};
        default: break;
    }
    Columns cols{{2, 4}, {1, 4}};
    const Columns block{{3}, {1, 2, 4}, {3}, {1, 4}};
    const int q = (n - 3) / 4;
    for (int i = 0; i < q; ++i) append(cols, i % 2 ? flipped(block, 4) : block);
    static const Columns tails[] = {
        {{2, 4}}, {{2, 4}, {1, 3}}, {{2, 4}, {1, 3}, {2, 4}}, {{2, 4}, {1, 3}, {1, 4}, {2, 4}}};
    const Columns& tail = tails[n - 2 - 4 * q - 1];
    append(cols, (q - 1) % 2 ? flipped(tail, 4) : tail);
    return cols;
}

inline Columns family_22_5(int n) {
    const Columns start{{2, 4}, {1, 4, 5}, {3}, {1, 2, 5}};
    const Columns end{{1, 4, 5}, {3}, {1, 2, 5}, {2, 4}};
    switch (n) {
        case 5: return {{2, 4}, {1, 4, 5}, {3}, {1, 2, 5}, {2, 4}};
        case 6: return {{2, 4}, {1, 3, 5}, {2, 4}, {2, 4}, {1, 3, 5}, {2, 4}};
        case 7: return {{2, 4}, {1, 4, 5}, {3}, {1, 2, 5}, {2, 4}, {1, 3, 5}, {2, 4}};
        case 8: return {{2, 4}, {1, 4, 5}, {3}, {1, 2, 5}, {2, 4}, {2, 4}, {1, 3, 5}, {2, 4}};
        case 9: return {{2, 4}, {1, 4, 5}, {3}, {1, 2, 5}, {2, 4}, {1, 4, 5}, {3}, {1, 2, 5}, {2, 4}};
        case 10: return {{2, 4}, {1, 4, 5}, {3}, {1, 2, 5}, {2, 4}, {2, 4}, {1, 4, 5}, {3}, {1, 2, 5}, {2, 4}};
        default: break;
    }
    const Columns block{{3, 4}, {1, 4}, {2, 5}, {2, 3}, {1, 4, 5}, {3}, {1, 2, 5}};
    static const Columns fills[] = {
        {},
        {{2, 4}},
        {{2, 4}, {2, 4}},
        {{3, 4}, {1, 5}, {2, 3}},
        {{3, 4}, {1, 4}, {2, 5}, {2, 3}},
        {{2, 4}, {1, 4, 5}, {3}, {1, 2, 5}, {2, 4}},
        {{2, 4}, {2, 4}, {1, 4, 5}, {3}, {1, 2, 5}, {2, 4}},
    };
    Columns cols = start;
    for (int i = 0; i < (n - 8) / 7; ++i) append(cols, block);
    append(cols, fills[(n - 8) % 7]);
    append(cols, end);
    return cols;
}

inline Columns family_31_3(int n) {
    Columns cols(static_cast<std::size_t>(n));
    for (int c = 2; c <= n; c += 3) cols[static_cast<std::size_t>(c - 1)] = {2};
    if (n % 3 == 1) cols[static_cast<std::size_t>(n - 1)] = {2};
    return cols;
}

inline Columns family_31_4(int n) {
    switch (n) {
        case 4: return {{3}, {}, {1}, {4}};
        case 5: return {{3}, {}, {}, {1}, {4}};
        case 6: return {{3}, {}, {}, {1}, {4}, {2}};
        case 7: return {{3}, {}, {}, {1}, {4}, {}, {2}};
        default: break;
    }
    const Columns piece{{3}, {}, {}, {1}, {4}, {}, {}};
    static const Columns endings[] = {
        {{2}},
        {{2}, {3}},
        {{2}, {}, {3}},
        {{2}, {}, {4}, {1}},
        {{2}, {}, {}, {4}, {1}},
        {{2}, {}, {}, {4}, {1}, {3}},
        {{2}, {}, {}, {4}, {1}, {}, {3}},
    };
    Columns cols = piece;
    bool last_flipped = false;
    while (n - static_cast<int>(cols.size()) > 7) {
        last_flipped = !last_flipped;
        append(cols, last_flipped ? flipped(piece, 4) : piece);
    }
    const Columns& ending = endings[n - static_cast<int>(cols.size()) - 1];
    append(cols, last_flipped ? flipped(ending, 4) : ending);
    return cols;
}

inline Columns family_32_3(int n) {
    Columns cols(static_cast<std::size_t>(n));
    int row = 3;
    for (int c = 1; c <= n; c += 2, row = 4 - row) cols[static_cast<std::size_t>(c - 1)] = {row};
    if (n % 2 == 0) cols[static_cast<std::size_t>(n - 1)] = {4 - cols[static_cast<std::size_t>(n - 2)][0]};
    return cols;
}

inline Columns family_32_4(int n) {
    switch (n) {
        case 4: return {{4}, {1}, {}, {3}};
        case 5: return {{4}, {1}, {}, {3}, {2}};
        case 6: return {{4}, {1}, {}, {3}, {1}, {4}};
        default: break;
    }
    const Columns piece{{4}, {1}, {}, {3}, {}};
    static const Columns endings[] = {
        {{1}, {4}},
        {{1}, {4}, {2}},
        {{1}, {4}, {}, {2}},
        {{1}, {4}, {}, {2}, {3}},
        {{1}, {4}, {}, {2}, {4}, {1}},
    };
    Columns cols = piece;
    bool last_flipped = false;
    while (n - static_cast<int>(cols.size()) > 6) {
        last_flipped = !last_flipped;
        append(cols, last_flipped ? flipped(piece, 4) : piece);
    }
    const Columns& ending = endings[n - static_cast<int>(cols.size()) - 2];
    append(cols, last_flipped ? flipped(ending, 4) : ending);
    return cols;
}

inline void check_family_n(const FamilyId& f, int n) {
    if (n < f.width)
        throw invalid_input("family " + to_string(f) + " starts at n=" + std::to_string(f.width) + ", got " +
                            std::to_string(n));
}

}  // namespace detail

/// D_n on the width x n grid.
[[nodiscard]] inline TowerSet build_family_set(const FamilyId& f, int n) {
    detail::check_family_n(f, n);
    const int t = f.params.t, r = f.params.r;
    detail::Columns cols;
    if (t == 2) {
        cols = f.width == 3 ? detail::family_22_3(n) : f.width == 4 ? detail::family_22_4(n) : detail::family_22_5(n);
    } else if (r == 1) {
        cols = f.width == 3 ? detail::family_31_3(n) : detail::family_31_4(n);
    } else {
        cols = f.width == 3 ? detail::family_32_3(n) : detail::family_32_4(n);
    }
    if (static_cast<int>(cols.size()) != n)
        throw std::logic_error("family " + to_string(f) + " produced " + std::to_string(cols.size()) +
                               " columns for n=" + std::to_string(n));
    std::vector<Vertex> towers;
    for (int c = 1; c <= n; ++c)
        for (int row : cols[static_cast<std::size_t>(c - 1)]) towers.push_back({row, c});
    return TowerSet(std::move(towers));
}

/// The printed closed form for |D_n|.
[[nodiscard]] inline int family_cardinality(const FamilyId& f, int n) {
    detail::check_family_n(f, n);
    using detail::ceil_div;
    using detail::floor_div;
    const long N = n;
    if (f.params.t == 2) {
        if (f.width == 3) return static_cast<int>(ceil_div(4 * N, 3));
        if (f.width == 4) return static_cast<int>(2 * N - ceil_div(N - 6, 4));
        return static_cast<int>(2 * N + ceil_div(N + 2, 7));
    }
    if (f.params.r == 1) {
        if (f.width == 3) return static_cast<int>(ceil_div(N, 3));
        return static_cast<int>(floor_div(N + 1, 7) + floor_div(N + 3, 7) + floor_div(N + 5, 7) + 1);
    }
    if (f.width == 3) return static_cast<int>(ceil_div(N + 1, 2));
    return static_cast<int>(ceil_div(N + 4, 5) + ceil_div(N + 2, 5) + ceil_div(N, 5) + 1);
}

struct FamilyCount {
    int printed = 0;
    /// Only for (3,2)x4: 3 at n=4, one more whenever n = 0, 1, 3 (mod 5).
    std::optional<int> recurrence;
    [[nodiscard]] bool consistent() const { return !recurrence || *recurrence == printed; }
};

[[nodiscard]] inline FamilyCount family_count(const FamilyId& f, int n) {
    FamilyCount out{family_cardinality(f, n), std::nullopt};
    if (f.params == BroadcastParams{3, 2} && f.width == 4) {
        int value = 3;
        for (int k = 5; k <= n; ++k)
            if (k % 5 == 0 || k % 5 == 1 || k % 5 == 3) ++value;
        out.recurrence = value;
    }
    return out;
}

}  // namespace bdom
