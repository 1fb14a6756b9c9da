#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "bdom/harness.hpp"

using namespace bdom;
namespace fs = std::filesystem;

namespace {

class TempFile {
public:
    explicit TempFile(const std::string& name) : path_(fs::temp_directory_path() / ("bdom_test_" + name)) {
        fs::remove(path_);
    }
    ~TempFile() { fs::remove(path_); }
    [[nodiscard]] const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

}  // namespace

TEST(Reference, TablesHave55Entries) {
    for (const auto& p : {BroadcastParams{2, 2}, {3, 1}}) {
        int count = 0;
        for (int m = 1; m <= 10; ++m)
            for (int n = 1; n <= m; ++n) count += reference_value(p, m, n).has_value();
        EXPECT_EQ(count, 55);
    }
    EXPECT_EQ(*reference_value({2, 2}, 7, 6), 19);
    EXPECT_EQ(*reference_value({2, 2}, 6, 7), 19);
    EXPECT_EQ(*reference_value({3, 1}, 7, 5), 4);
    EXPECT_FALSE(reference_value({3, 2}, 3, 3).has_value());
    EXPECT_FALSE(reference_value({2, 2}, 11, 3).has_value());
}

TEST(Table, SingleCell) {
    const auto t = reproduce_table({3, 2}, 1, 1);
    ASSERT_EQ(t.entries.size(), 1U);
    EXPECT_EQ(t.entries[0].gamma, 1);
}

TEST(Table, LowerTriangularAndSchedulingFree) {
    TableOptions one;
    one.threads = 1;
    TableOptions four;
    four.threads = 4;
    const auto a = reproduce_table({2, 2}, 7, 5, one);
    const auto b = reproduce_table({2, 2}, 7, 5, four);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        EXPECT_GE(a.entries[i].m, a.entries[i].n);
        EXPECT_LE(a.entries[i].n, 5);
        EXPECT_EQ(a.entries[i].m, b.entries[i].m);
        EXPECT_EQ(a.entries[i].n, b.entries[i].n);
        EXPECT_EQ(a.entries[i].gamma, b.entries[i].gamma);
    }
    EXPECT_EQ(a.entries.size(), 1U + 2 + 3 + 4 + 5 + 5 + 5);
}

TEST(Table, SymmetricCompletable) {
    const auto t = reproduce_table({3, 1}, 6, 6);
    for (int m = 1; m <= 6; ++m)
        for (int n = m; n <= 6; ++n) EXPECT_EQ(*t.at(m, n), solve({m, n}, {3, 1}).gamma);
}

TEST(Table, Emitters) {
    const auto t = reproduce_table({2, 2}, 3, 3);
    EXPECT_EQ(table_csv(t), "m,n,gamma,method\n1,1,1,dp\n2,1,2,dp\n2,2,2,dp\n3,1,2,dp\n3,2,3,dp\n3,3,4,dp\n");
    EXPECT_EQ(table_ascii(t), "m\\n  1  2  3\n  1  1\n  2  2  2\n  3  2  3  4\n");
}

TEST(Cache, StoreLookupNewestWins) {
    TempFile f("cache1.jsonl");
    std::ostringstream warn;
    ResultCache cache(f.path(), &warn);
    EXPECT_FALSE(cache.lookup({2, 2}, {3, 3}, Method::dp).has_value());
    const auto s = solve({3, 3}, {2, 2});
    cache.store({{2, 2}, {3, 3}, s.gamma, Method::dp, s.witness, "2026-01-01T00:00:00Z", solver_version});
    cache.store({{2, 2}, {3, 3}, 5, Method::bound, std::nullopt, "2026-01-01T00:00:01Z", solver_version});
    cache.store({{2, 2}, {3, 3}, 6, Method::bound, std::nullopt, "2026-01-01T00:00:02Z", solver_version});
    const auto dp = cache.lookup({2, 2}, {3, 3}, Method::dp);
    ASSERT_TRUE(dp.has_value());
    EXPECT_EQ(dp->gamma, 4);
    EXPECT_EQ(*dp->witness, s.witness);
    EXPECT_EQ(cache.lookup({2, 2}, {3, 3}, Method::bound)->gamma, 6);
    EXPECT_FALSE(cache.lookup({2, 2}, {3, 4}, Method::dp).has_value());
    EXPECT_TRUE(warn.str().empty());
}

TEST(Cache, CorruptAndForgedLinesAreSkipped) {
    TempFile f("cache2.jsonl");
    {
        std::ofstream out(f.path());
        out << "{not json\n";
        out << R"({"t":2,"r":2,"m":3,"n":3,"gamma":1,"method":"dp","witness":[[2,2]]})" << "\n";
        out << R"({"t":2,"r":2,"m":3,"n":3,"gamma":3,"method":"dp","witness":[[1,2],[2,1],[2,3],[3,2]]})" << "\n";
        out << R"({"t":2,"r":2,"m":3,"n":3,"gamma":-1,"method":"bound"})" << "\n";
        out << R"({"t":2,"r":2,"m":3,"n":3,"gamma":4,"method":"magic"})" << "\n";
        out << R"({"t":2,"r":2,"m":3,"n":3,"gamma":4,"method":"dp","witness":[[1,2],[2,1],[2,3],[3,2]]})" << "\n";
    }
    std::ostringstream warn;
    ResultCache cache(f.path(), &warn);
    EXPECT_EQ(cache.records().size(), 1U);
    EXPECT_EQ(cache.lookup({2, 2}, {3, 3}, Method::dp)->gamma, 4);
    std::size_t lines = 0;
    for (char c : warn.str()) lines += c == '\n';
    EXPECT_EQ(lines, 2 * 5U);  // two reads, five bad lines each
}

TEST(Cache, RefusesBadRecords) {
    TempFile f("cache3.jsonl");
    ResultCache cache(f.path(), nullptr);
    EXPECT_THROW(cache.store({{2, 2}, {3, 3}, 1, Method::dp, TowerSet{{2, 2}}, {}, solver_version}), invalid_input);
    EXPECT_THROW(cache.store({{2, 2}, {3, 3}, -2, Method::bound, std::nullopt, {}, solver_version}), invalid_input);
}

TEST(Cache, CachedGammaMatchesRecomputation) {
    TempFile f("cache4.jsonl");
    ResultCache cache(f.path(), nullptr);
    TableOptions opt;
    opt.cache = &cache;
    const auto first = reproduce_table({2, 2}, 6, 6, opt);
    const auto records = cache.records();
    EXPECT_EQ(records.size(), first.entries.size());
    for (std::size_t i = 0; i < records.size(); i += 4)
        EXPECT_EQ(records[i].gamma, solve(records[i].dims, records[i].params).gamma);
    const auto again = reproduce_table({2, 2}, 6, 6, opt);
    EXPECT_EQ(cache.records().size(), first.entries.size());
    for (std::size_t i = 0; i < again.entries.size(); ++i) EXPECT_EQ(again.entries[i].gamma, first.entries[i].gamma);
}

TEST(Cache, PathFromEnvironment) {
    ::setenv(cache_env_var, "/tmp/somewhere.jsonl", 1);
    EXPECT_EQ(ResultCache::path_from_env()->string(), "/tmp/somewhere.jsonl");
    ::setenv(cache_env_var, "", 1);
    EXPECT_FALSE(ResultCache::path_from_env().has_value());
    ::unsetenv(cache_env_var);
}

TEST(Report, TwoTwoThreeRows) {
    const auto rep = consistency_report({2, 2}, {3, 3}, {3, 30});
    EXPECT_EQ(rep.instances.size(), 28U);
    for (const auto& c : rep.instances) {
        ASSERT_TRUE(c.formula.has_value());
        EXPECT_EQ(*c.dp, *c.formula);
        EXPECT_EQ(*c.dp, (4 * c.dims.cols + 2) / 3);
        EXPECT_EQ(*c.construction, *c.dp);
    }
    EXPECT_TRUE(rep.discrepancies.empty());
}

TEST(Report, ThreeTwoFourFlagsPrintedFormula) {
    const auto rep = consistency_report({3, 2}, {4, 4}, {4, 20});
    EXPECT_FALSE(rep.has_defects());
    std::vector<int> rec_mismatch;
    for (const auto& d : rep.of_kind("dp-recurrence")) rec_mismatch.push_back(d.dims.cols);
    EXPECT_EQ(rec_mismatch, (std::vector<int>{6, 11, 16}));
    for (const auto& c : rep.instances) {
        const bool differs = *c.formula != *c.recurrence;
        bool flagged = false;
        for (const auto& d : rep.of_kind("formula-recurrence")) flagged = flagged || d.dims == c.dims;
        EXPECT_EQ(differs, flagged);
    }
    EXPECT_FALSE(rep.of_kind("formula-recurrence").empty());
}

TEST(Report, OracleRunsOnSmallInstances) {
    const auto rep = consistency_report({3, 2}, {2, 4}, {2, 5});
    for (const auto& c : rep.instances) {
        ASSERT_TRUE(c.oracle.has_value());
        EXPECT_EQ(*c.oracle, *c.dp);
    }
    EXPECT_FALSE(rep.has_defects());
}

TEST(Report, TwoTwoBoundSlackIsNonNegative) {
    ReportOptions opt;
    opt.run_oracle = false;
    const auto rep = consistency_report({2, 2}, {6, 10}, {6, 10}, opt);
    EXPECT_FALSE(rep.has_defects());
    EXPECT_TRUE(rep.of_kind("bound-below-dp").empty());
    for (const auto& c : rep.instances) {
        EXPECT_GE(*c.slack(), 0);
        EXPECT_LE(*c.construction, *c.bound);
    }
}

TEST(Probe, ReductionNeedsRAtLeastThree) {
    EXPECT_THROW((void)conjecture_probe(ProbeKind::reduction, {2, 2}, {1, 3}, {1, 3}), invalid_input);
    EXPECT_THROW((void)conjecture_probe(ProbeKind::reduction, {3, 2}, {1, 3}, {1, 3}), invalid_input);
    EXPECT_THROW((void)parse_probe_kind("nope"), invalid_input);
}

TEST(Probe, ReductionReportsEveryPair) {
    const auto rep = conjecture_probe(ProbeKind::reduction, {3, 3}, {1, 4}, {1, 4});
    EXPECT_EQ(rep.observations.size(), 10U);
    EXPECT_EQ(*rep.reduced, BroadcastParams(2, 1));
    for (const auto& o : rep.observations) {
        EXPECT_LE(o.dims.rows, o.dims.cols);
        EXPECT_EQ(o.lhs, solve(o.dims, {3, 3}).gamma);
        EXPECT_EQ(o.rhs, solve(o.dims, {2, 1}).gamma);
    }
}

TEST(Probe, Tightness) {
    const auto rep = conjecture_probe(ProbeKind::tightness, {2, 2}, {1, 7}, {1, 7});
    EXPECT_EQ(rep.observations.size(), 3U);  // 6x6, 6x7, 7x7
    EXPECT_EQ(rep.equal_count(), 3U);
}
