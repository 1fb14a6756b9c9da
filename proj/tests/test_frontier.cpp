#include <bit>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "bdom/frontier.hpp"
#include "bdom/oracle.hpp"

using namespace bdom;

TEST(Transition, SaturatedColumnFinalizes) {
    const auto s = FrontierState::from_pending(3, 2, {{2, 2, 2}});
    EXPECT_TRUE(dp_transition(s, 0b010, {2, 2}, 3).finalized_ok);
}

TEST(Transition, HoleFailsWithoutHelp) {
    const auto s = FrontierState::from_pending(3, 2, {{2, 0, 2}});
    EXPECT_FALSE(dp_transition(s, 0, {2, 2}, 3).finalized_ok);
}

TEST(Transition, TowerTwoColumnsAwayReachesOldest) {
    const auto s = FrontierState::from_pending(1, 3, {{0}, {0}});
    const auto res = dp_transition(s, 1, {3, 1}, 1);
    EXPECT_TRUE(res.finalized_ok);
    EXPECT_EQ(res.next.pending, (std::vector<std::vector<int>>{{1}, {1}}));
    EXPECT_EQ(res.next.incoming, (std::vector<std::vector<int>>{{1}, {1}}));
}

TEST(Transition, ValuesAreCapped) {
    const auto s = FrontierState::from_pending(2, 2, {{1, 1}});
    const auto res = dp_transition(s, 0b11, {2, 2}, 2);
    EXPECT_EQ(res.next.pending[0], (std::vector<int>{2, 2}));
    EXPECT_EQ(res.next.incoming[0], (std::vector<int>{1, 1}));
}

TEST(Transition, T1HasNoWindow) {
    const FrontierState s(2, 1);
    EXPECT_TRUE(s.pending.empty());
    EXPECT_TRUE(dp_transition(s, 0b11, {1, 1}, 2).finalized_ok);
    EXPECT_FALSE(dp_transition(s, 0b01, {1, 1}, 2).finalized_ok);
}

TEST(Transition, RejectsMismatch) {
    EXPECT_THROW((void)dp_transition(FrontierState(3, 2), 0, {3, 1}, 3), invalid_input);
    EXPECT_THROW((void)dp_transition(FrontierState(3, 2), 0b1000, {2, 1}, 3), invalid_input);
    EXPECT_THROW((void)FrontierState::from_pending(3, 2, {}), invalid_input);
}

namespace {

// Column-at-a-time DP driven only by dp_transition; independent of the
// production sweep.
int column_dp(const GridDims& dims, const BroadcastParams& params) {
    const int m = dims.rows, t = params.t;
    std::map<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>, int> layer;
    const FrontierState start(m, t);
    layer[{start.pending, start.incoming}] = 0;
    auto step = [&](ColumnMask upto, bool final_cols) {
        std::map<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>, int> next;
        for (const auto& [key, cost] : layer) {
            FrontierState s(m, t);
            s.pending = key.first;
            s.incoming = key.second;
            for (ColumnMask mask = 0; mask <= upto; ++mask) {
                if (final_cols && mask) break;
                const auto res = dp_transition(s, mask, params, m);
                if (!res.finalized_ok) continue;
                const int c = cost + std::popcount(mask);
                auto k = std::pair{res.next.pending, res.next.incoming};
                auto it = next.find(k);
                if (it == next.end() || it->second > c) next[k] = c;
            }
        }
        layer = std::move(next);
    };
    // The first t-1 transitions finalize virtual columns; prime them as full.
    {
        std::map<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>, int> primed;
        for (const auto& [key, cost] : layer) {
            auto pending = key.first;
            for (auto& col : pending)
                for (auto& v : col) v = params.r;
            primed[{pending, key.second}] = cost;
        }
        layer = std::move(primed);
    }
    for (int c = 0; c < dims.cols; ++c) step((1U << m) - 1, false);
    for (int c = 0; c < t - 1; ++c) step(0, true);
    int best = -1;
    for (const auto& [key, cost] : layer) best = best < 0 ? cost : std::min(best, cost);
    return best;
}

}  // namespace

TEST(Transition, ColumnDpMatchesOracle) {
    for (auto params : {BroadcastParams{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}})
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 4; ++n) {
                const GridDims dims(m, n);
                EXPECT_EQ(column_dp(dims, params), brute_min(dims, params).gamma)
                    << to_string(params) << " " << m << "x" << n;
            }
}
