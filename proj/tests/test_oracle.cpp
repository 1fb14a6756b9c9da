#include <gtest/gtest.h>

#include "bdom/oracle.hpp"

using namespace bdom;

TEST(Oracle, Examples) {
    EXPECT_EQ(brute_min({3, 3}, {2, 2}).gamma, 4);
    EXPECT_EQ(brute_min({3, 3}, {3, 1}).gamma, 1);
    for (int t = 1; t <= 3; ++t)
        for (int r = 1; r <= t; ++r) {
            const auto res = brute_min({1, 1}, {t, r});
            EXPECT_EQ(res.gamma, 1);
            EXPECT_EQ(res.witness, TowerSet({{1, 1}}));
        }
}

TEST(Oracle, WitnessIsFirstInLexOrder) {
    // Only the centre is within distance 2 of every vertex.
    EXPECT_EQ(brute_min({3, 3}, {3, 1}).witness, TowerSet({{2, 2}}));
    EXPECT_EQ(brute_min({2, 2}, {2, 1}).witness, TowerSet({{1, 1}, {1, 2}}));
    EXPECT_EQ(brute_min({2, 2}, {1, 1}).witness, TowerSet({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
}

TEST(Oracle, WitnessDominates) {
    for (auto params : {BroadcastParams{2, 1}, {2, 2}, {3, 2}})
        for (int m = 1; m <= 4; ++m)
            for (int n = m; n <= 4; ++n) {
                const GridDims dims(m, n);
                const auto res = brute_min(dims, params);
                EXPECT_TRUE(is_dominating(dims, params, res.witness));
                EXPECT_EQ(static_cast<int>(res.witness.size()), res.gamma);
            }
}

TEST(Oracle, MonotoneInGridGrowth) {
    for (auto params : {BroadcastParams{2, 2}, {3, 1}})
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n < 5 && m * (n + 1) <= 20; ++n)
                EXPECT_LE(brute_min({m, n}, params).gamma, brute_min({m, n + 1}, params).gamma);
}

TEST(Oracle, RefusesLargeGrids) {
    EXPECT_THROW((void)brute_min({5, 6}, {2, 2}), invalid_input);
    OracleOptions small{4};
    EXPECT_THROW((void)brute_min({2, 3}, {2, 2}, small), invalid_input);
    EXPECT_THROW((void)verify_minimum({6, 6}, {2, 2}, {}), invalid_input);
}

TEST(VerifyMinimum, Examples) {
    EXPECT_TRUE(verify_minimum({5, 5}, {3, 2}, {{3, 1}, {1, 3}, {5, 3}, {3, 5}}));
    EXPECT_TRUE(verify_minimum({1, 1}, {2, 2}, {{1, 1}}));
    const TowerSet five{{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 1}};
    ASSERT_TRUE(is_dominating({3, 3}, {2, 2}, five));
    EXPECT_FALSE(verify_minimum({3, 3}, {2, 2}, five));
    EXPECT_FALSE(verify_minimum({3, 3}, {2, 2}, {{2, 2}}));
}
