#include <algorithm>

#include <gtest/gtest.h>

#include "bdom/pattern.hpp"
#include "bdom/solver.hpp"

using namespace bdom;

TEST(PatternText, RoundTrip) {
    for (const char* s : {"2-1-3", "0", "3-1-3-2-2-2-2-2-3-1-3", "10-0"}) EXPECT_EQ(Pattern::parse(s).str(), s);
    EXPECT_EQ(Pattern::parse("2-1-3").counts, (std::vector<int>{2, 1, 3}));
}

TEST(PatternText, RejectsMalformed) {
    for (const char* s : {"", "2--1", "-1", "a", "1-", "1-x", "1.5"}) EXPECT_THROW((void)Pattern::parse(s), invalid_input) << s;
    EXPECT_THROW(Pattern::parse("4-1").validate(3), invalid_input);
}

TEST(PatternText, ColumnPattern) {
    EXPECT_EQ(column_pattern({3, 4}, {{1, 1}, {3, 1}, {2, 2}, {2, 4}}).str(), "2-1-0-1");
}

TEST(Placements, Counts) {
    EXPECT_EQ(enumerate_pattern_placements(3, Pattern::parse("2-1-1-1")).size(), 81U);
    EXPECT_EQ(enumerate_pattern_placements(4, Pattern::parse("2-1-2")).size(), 144U);
    const auto empty = enumerate_pattern_placements(2, Pattern::parse("0"));
    ASSERT_EQ(empty.size(), 1U);
    EXPECT_TRUE(empty[0].empty());
}

TEST(Placements, LexicographicAndFaithful) {
    const auto all = enumerate_pattern_placements(4, Pattern::parse("2-1-2"));
    // Order is lexicographic over the per-column row choices, left to right.
    auto key = [](const TowerSet& s) {
        std::vector<std::pair<int, int>> k;
        for (const auto& v : s) k.emplace_back(v.col, v.row);
        std::sort(k.begin(), k.end());
        return k;
    };
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(key(all[i - 1]), key(all[i]));
    for (const auto& s : all) EXPECT_EQ(column_pattern({4, 3}, s).str(), "2-1-2");
}

TEST(Properties, Examples) {
    const TowerSet three_one_three{{1, 1}, {2, 1}, {5, 1}, {3, 2}, {1, 3}, {4, 3}, {5, 3}};
    EXPECT_TRUE(check_subpattern_properties(5, {2, 2}, three_one_three, 3));
    for (const auto& s : enumerate_pattern_placements(3, Pattern::parse("2-1-1-1")))
        EXPECT_FALSE(check_subpattern_properties(3, {2, 2}, s, 4));
    EXPECT_TRUE(check_subpattern_properties(1, {1, 1}, {{1, 1}}, 1));
    EXPECT_THROW((void)check_subpattern_properties(3, {3, 1}, {}, 2), invalid_input);
}

TEST(Properties, Requirements) {
    // (2,2), k=3: the band is column 2..2; columns 2-1=1 and 3 need 1.
    EXPECT_EQ(column_requirements(3, {2, 2}), (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(column_requirements(5, {3, 1}), (std::vector<int>{0, 0, 1, 0, 0}));
    EXPECT_EQ(column_requirements(1, {1, 1}), (std::vector<int>{1}));
}

TEST(Properties, FlipInvariant) {
    for (const char* p : {"2-1-2", "3-1-1", "1-2-1-2"})
        for (const auto& s : enumerate_pattern_placements(4, Pattern::parse(p))) {
            const int k = Pattern::parse(p).length();
            EXPECT_EQ(check_subpattern_properties(4, {2, 2}, s, k),
                      check_subpattern_properties(4, {2, 2}, s.flipped_vertically(4), k));
        }
}

TEST(Mps, Refutations) {
    EXPECT_TRUE(mps_search(3, {2, 2}, Pattern::parse("1-1-1")).empty());
    EXPECT_TRUE(mps_search(3, {2, 2}, Pattern::parse("2-1-0")).empty());
    EXPECT_TRUE(mps_search(3, {2, 2}, Pattern::parse("2-1-1-1")).empty());
    EXPECT_TRUE(mps_search(4, {2, 2}, Pattern::parse("3-1-1")).empty());
    EXPECT_TRUE(mps_search(4, {2, 2}, Pattern::parse("2-1-2")).empty());
    EXPECT_TRUE(mps_search(3, {3, 1}, Pattern::parse("1-0-0-0-1")).empty());
    EXPECT_TRUE(mps_search(5, {2, 2}, Pattern::parse("3-1-3-2-2-2-2-2-3-1-3")).empty());
}

TEST(Mps, ThreeOneThreeIsAFlipPair) {
    const auto found = mps_search(5, {2, 2}, Pattern::parse("3-1-3"));
    ASSERT_EQ(found.size(), 2U);
    EXPECT_EQ(found[0].flipped_vertically(5), found[1]);
    EXPECT_TRUE(found[0].contains({3, 2}));
}

TEST(Mps, AgreesWithFilteredEnumeration) {
    for (const char* p : {"2-1-2", "1-2-1", "2-2-1-1"}) {
        const auto pat = Pattern::parse(p);
        std::size_t expect = 0;
        for (const auto& s : enumerate_pattern_placements(4, pat))
            expect += check_subpattern_properties(4, {2, 2}, s, pat.length());
        EXPECT_EQ(mps_search(4, {2, 2}, pat).size(), expect) << p;
    }
}

TEST(Refute, TwoOneOneHasOneSurvivor) {
    const auto rep = refute_smaller_patterns(3, {2, 2}, Pattern::parse("2-1-1"));
    EXPECT_FALSE(rep.minimal);
    std::vector<std::string> survivors;
    for (const auto& v : rep.verdicts)
        if (v.survivors) survivors.push_back(v.pattern.str());
    EXPECT_EQ(survivors, std::vector<std::string>{"0-3-0"});
    for (const auto& v : rep.verdicts) EXPECT_LT(v.pattern.total(), 4);
}

TEST(Refute, SingleColumn) {
    const auto rep = refute_smaller_patterns(1, {1, 1}, Pattern::parse("1"));
    EXPECT_TRUE(rep.minimal);
    ASSERT_EQ(rep.verdicts.size(), 1U);
    EXPECT_EQ(rep.verdicts[0].pattern.str(), "0");
}

TEST(Refute, ThreeOneWidthThree) {
    // Only the middle column is constrained at k=5, so one tower can meet it.
    const auto rep = refute_smaller_patterns(3, {3, 1}, Pattern::parse("1-0-0-0-1"));
    EXPECT_FALSE(rep.minimal);
    std::vector<std::string> survivors;
    for (const auto& v : rep.verdicts)
        if (v.survivors) survivors.push_back(v.pattern.str());
    EXPECT_EQ(survivors, (std::vector<std::string>{"0-0-0-1-0", "0-0-1-0-0", "0-1-0-0-0"}));
    EXPECT_TRUE(mps_search(3, {3, 1}, Pattern::parse("1-0-0-0-1")).empty());
}

TEST(Mps, TwoOneThreeCannotOpenAGrid) {
    // A dominating set of G_{5,n} starting with 2-1-3: columns 1 and 2 hear
    // nothing beyond column 3, so both must reach 2 from the window alone.
    const BroadcastParams p(2, 2);
    std::size_t ok = 0;
    for (const auto& s : enumerate_pattern_placements(5, Pattern::parse("2-1-3"))) {
        const auto f = reception_from({5, 3}, p.t, s);
        bool good = true;
        for (int i = 1; i <= 5; ++i) good = good && f.at(i, 1) >= 2 && f.at(i, 2) >= 2;
        ok += good;
    }
    EXPECT_EQ(ok, 0U);
}

TEST(Mps, DpWitnessesAvoidRefutedPatterns) {
    struct Case {
        BroadcastParams params;
        int m;
        std::vector<const char*> refuted;
    };
    const std::vector<Case> cases{{{2, 2}, 3, {"1-1-1", "2-1-0", "0-1-2", "2-1-1-1", "1-1-1-2"}},
                                  {{2, 2}, 4, {"3-1-1", "1-1-3", "2-1-2"}},
                                  {{3, 1}, 3, {"1-0-0-0-1"}}};
    for (const auto& c : cases) {
        for (const char* bad : c.refuted) ASSERT_TRUE(mps_search(c.m, c.params, Pattern::parse(bad)).empty()) << bad;
        for (int n = c.m; n <= 14; ++n) {
            const auto sol = solve({c.m, n}, c.params, SolverOptions{.orient = false});
            const auto cols = "-" + column_pattern({c.m, n}, sol.witness).str() + "-";
            for (const char* bad : c.refuted)
                EXPECT_EQ(cols.find("-" + std::string(bad) + "-"), std::string::npos)
                    << to_string(c.params) << " " << c.m << "x" << n << " " << cols;
        }
    }
}
