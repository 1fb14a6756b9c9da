#pragma once

// Table reproduction, cross-validation reports, conjecture probes and the
// persistent result cache.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bdom/families.hpp"
#include "bdom/grid.hpp"
#include "bdom/io.hpp"
#include "bdom/lattice.hpp"
#include "bdom/oracle.hpp"
#include "bdom/solver.hpp"

namespace bdom {

inline constexpr const char* solver_version = "bdom-1.0.0";
inline constexpr const char* cache_env_var = "BDOM_CACHE";

enum class Method { dp, oracle, formula, construction, bound };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::dp: return "dp";
        case Method::oracle: return "oracle";
        case Method::formula: return "formula";
        case Method::construction: return "construction";
        case Method::bound: return "bound";
    }
    return "?";
}

[[nodiscard]] inline Method parse_method(const std::string& s) {
    for (Method m : {Method::dp, Method::oracle, Method::formula, Method::construction, Method::bound})
        if (to_string(m) == s) return m;
    throw invalid_input("unknown method \"" + s + "\"");
}

/// Methods whose gamma is realized by the witness itself.
[[nodiscard]] inline bool witness_sized(Method m) {
    return m == Method::dp || m == Method::oracle || m == Method::construction;
}

[[nodiscard]] inline std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct ResultRecord {
    BroadcastParams params;
    GridDims dims;
    int gamma = 0;
    Method method = Method::dp;
    std::optional<TowerSet> witness;
    std::string timestamp;
    std::string version = solver_version;
};

[[nodiscard]] inline nlohmann::json to_json(const ResultRecord& rec) {
    nlohmann::json j;
    j["t"] = rec.params.t;
    j["r"] = rec.params.r;
    j["m"] = rec.dims.rows;
    j["n"] = rec.dims.cols;
    j["gamma"] = rec.gamma;
    j["method"] = to_string(rec.method);
    if (rec.witness) j["witness"] = towers_to_json(*rec.witness);
    j["timestamp"] = rec.timestamp;
    j["version"] = rec.version;
    return j;
}

/// Parses one cache line and re-checks the witness. Throws invalid_input on
/// anything that should not be trusted.
[[nodiscard]] inline ResultRecord record_from_json(const nlohmann::json& j) {
    for (const char* key : {"t", "r", "m", "n", "gamma"})
        if (!j.contains(key) || !j[key].is_number_integer())
            throw invalid_input(std::string("record needs integer field \"") + key + "\"");
    if (!j.contains("method") || !j["method"].is_string()) throw invalid_input("record needs a method");
    ResultRecord rec;
    rec.params = BroadcastParams(j["t"].get<int>(), j["r"].get<int>());
    rec.dims = GridDims(j["m"].get<int>(), j["n"].get<int>());
    rec.gamma = j["gamma"].get<int>();
    rec.method = parse_method(j["method"].get<std::string>());
    if (rec.gamma < 0) throw invalid_input("negative gamma");
    if (j.contains("witness")) {
        rec.witness = towers_from_json(j["witness"]);
        require_resident(rec.dims, *rec.witness);
        if (!is_dominating(rec.dims, rec.params, *rec.witness)) throw invalid_input("witness does not dominate");
        if (witness_sized(rec.method) && static_cast<int>(rec.witness->size()) != rec.gamma)
            throw invalid_input("witness size differs from gamma");
    }
    rec.timestamp = j.value("timestamp", "");
    rec.version = j.value("version", "");
    return rec;
}

/// Append-only JSONL store keyed by (t, r, m, n, method).
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path, std::ostream* warnings = &std::cerr)
        : path_(std::move(path)), warn_(warnings) {}

    /// The path named by BDOM_CACHE, if set and non-empty.
    static std::optional<std::filesystem::path> path_from_env() {
        const char* v = std::getenv(cache_env_var);
        if (v == nullptr || *v == '\0') return std::nullopt;
        return std::filesystem::path(v);
    }

    [[nodiscard]] const std::filesystem::path& path() const { return path_; }

    void store(ResultRecord rec) {
        if (rec.gamma < 0) throw invalid_input("negative gamma");
        if (rec.witness && !is_dominating(rec.dims, rec.params, *rec.witness))
            throw invalid_input("refusing to cache a non-dominating witness");
        if (rec.timestamp.empty()) rec.timestamp = utc_timestamp();
        const std::string line = to_json(rec).dump() + "\n";
        std::lock_guard lock(mu_);
        std::ofstream out(path_, std::ios::app);
        if (!out) throw invalid_input("cannot append to cache " + path_.string());
        out << line;
    }

    /// Newest valid record for the key.
    [[nodiscard]] std::optional<ResultRecord> lookup(const BroadcastParams& params, const GridDims& dims,
                                                     Method method) const {
        std::optional<ResultRecord> found;
        for (auto& rec : records())
            if (rec.params == params && rec.dims == dims && rec.method == method) found = std::move(rec);
        return found;
    }

    /// Every record that parses and verifies, in file order.
    [[nodiscard]] std::vector<ResultRecord> records() const {
        std::lock_guard lock(mu_);
        std::vector<ResultRecord> out;
        std::ifstream in(path_);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                out.push_back(record_from_json(nlohmann::json::parse(line)));
            } catch (const std::exception& e) {
                if (warn_) *warn_ << "warning: " << path_.string() << ":" << lineno << ": skipped (" << e.what() << ")\n";
            }
        }
        return out;
    }

private:
    std::filesystem::path path_;
    std::ostream* warn_;
    mutable std::mutex mu_;
};

/// solve() behind an optional cache.
[[nodiscard]] inline Solution cached_solve(const GridDims& dims, const BroadcastParams& params, ResultCache* cache,
                                           const SolverOptions& opt = {}) {
    if (cache) {
        if (auto hit = cache->lookup(params, dims, Method::dp); hit && hit->witness)
            return Solution{hit->gamma, *hit->witness, 0};
    }
    Solution s = solve(dims, params, opt);
    if (cache) cache->store({params, dims, s.gamma, Method::dp, s.witness, {}, solver_version});
    return s;
}

/// The printed (2,2) and (3,1) tables, rows m = 1..10, entries n = 1..m.
[[nodiscard]] inline std::optional<int> reference_value(const BroadcastParams& params, int m, int n) {
    static const int t22[10][10] = {
        {1}, {2, 2}, {2, 3, 4}, {3, 4, 6, 8}, {3, 5, 7, 10, 11}, {4, 6, 8, 12, 14, 16},
        {4, 7, 10, 13, 16, 19, 21}, {5, 8, 11, 15, 18, 22, 25, 28}, {5, 9, 12, 17, 20, 24, 28, 32, 35},
        {6, 10, 14, 19, 22, 27, 30, 35, 39, 42}};
    static const int t31[10][10] = {
        {1}, {1, 1}, {1, 1, 1}, {1, 2, 2, 3}, {1, 2, 2, 3, 4}, {2, 2, 2, 4, 4, 4}, {2, 2, 3, 4, 4, 6, 6},
        {2, 2, 3, 4, 5, 6, 7, 8}, {2, 3, 3, 5, 6, 6, 7, 8, 9}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 10}};
    if (m < n) std::swap(m, n);
    if (n < 1 || m > 10) return std::nullopt;
    if (params == BroadcastParams{2, 2}) return t22[m - 1][n - 1];
    if (params == BroadcastParams{3, 1}) return t31[m - 1][n - 1];
    return std::nullopt;
}

struct TableEntry {
    int m = 0;
    int n = 0;
    int gamma = 0;
    Method method = Method::dp;
};

struct GammaTable {
    BroadcastParams params;
    int max_m = 0;
    int max_n = 0;
    /// Row-major over m, then n = 1..min(m, max_n).
    std::vector<TableEntry> entries;

    /// Looks up (m,n) or its transpose.
    [[nodiscard]] std::optional<int> at(int m, int n) const {
        for (const auto& e : entries)
            if ((e.m == m && e.n == n) || (e.m == n && e.n == m)) return e.gamma;
        return std::nullopt;
    }
};

struct TableOptions {
    SolverOptions solver;
    /// 0 = hardware concurrency.
    unsigned threads = 0;
    ResultCache* cache = nullptr;
};

/// Lower-triangular table, m >= n. Cells run on a worker pool; the entry
/// order does not depend on scheduling.
[[nodiscard]] inline GammaTable reproduce_table(const BroadcastParams& params, int max_m, int max_n,
                                                const TableOptions& opt = {}) {
    if (max_m < 1 || max_n < 1) throw invalid_input("table bounds must be positive");
    GammaTable table{params, max_m, max_n, {}};
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= std::min(m, max_n); ++n) table.entries.push_back({m, n, 0, Method::dp});

    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr error;
    auto work = [&] {
        for (std::size_t i = next++; i < table.entries.size(); i = next++) {
            auto& e = table.entries[i];
            try {
                e.gamma = cached_solve(GridDims(e.m, e.n), params, opt.cache, opt.solver).gamma;
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!error) error = std::current_exception();
                next = table.entries.size();
            }
        }
    };
    unsigned threads = opt.threads ? opt.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(table.entries.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return table;
}

/// The family D_n matching these dimensions (one side equal to a family width).
[[nodiscard]] inline std::optional<std::pair<FamilyId, int>> family_for(const BroadcastParams& params,
                                                                        const GridDims& dims) {
    for (const auto& f : all_families()) {
        if (f.params != params) continue;
        if (dims.rows == f.width && dims.cols >= f.width) return std::pair{f, dims.cols};
        if (dims.cols == f.width && dims.rows >= f.width) return std::pair{f, dims.rows};
    }
    return std::nullopt;
}

/// D_n placed on `dims` (transposed when the family width is the column count).
[[nodiscard]] inline TowerSet family_set_for(const FamilyId& f, int n, const GridDims& dims) {
    TowerSet s = build_family_set(f, n);
    return dims.rows == f.width ? s : s.transposed();
}

[[nodiscard]] inline bool has_bound_formula(const BroadcastParams& params, const GridDims& dims) {
    if (params == BroadcastParams{2, 2}) return dims.rows >= 6 && dims.cols >= 6;
    return params == BroadcastParams{3, 1} || params == BroadcastParams{3, 2} || params == BroadcastParams{3, 3};
}

struct InstanceComparison {
    GridDims dims;
    std::optional<int> dp;
    std::optional<int> oracle;
    std::optional<int> formula;       // printed family closed form
    std::optional<int> recurrence;    // recurrence-derived family count
    std::optional<int> construction;  // verified explicit set size
    std::optional<long> bound;
    std::optional<int> reference;     // printed table value

    [[nodiscard]] std::optional<long> slack() const {
        if (!bound || !dp) return std::nullopt;
        return *bound - *dp;
    }
};

struct Discrepancy {
    GridDims dims;
    std::string kind;
    std::string detail;
    /// Defects fail the build; everything else is a recorded finding.
    bool defect = false;
};

struct ConsistencyReport {
    BroadcastParams params;
    std::vector<InstanceComparison> instances;
    std::vector<Discrepancy> discrepancies;
    std::vector<std::string> observations;

    [[nodiscard]] bool has_defects() const {
        return std::any_of(discrepancies.begin(), discrepancies.end(), [](const auto& d) { return d.defect; });
    }
    [[nodiscard]] std::vector<Discrepancy> of_kind(const std::string& kind) const {
        std::vector<Discrepancy> out;
        for (const auto& d : discrepancies)
            if (d.kind == kind) out.push_back(d);
        return out;
    }
};

struct IntRange {
    int lo = 1;
    int hi = 1;
};

struct ReportOptions {
    SolverOptions solver;
    OracleOptions oracle;
    bool run_oracle = true;
    /// Lattice constructions only up to this side length (0 disables them).
    int lattice_max_side = 12;
    CornerOptions corners;
    ResultCache* cache = nullptr;
};

namespace detail {

inline std::string dims_str(const GridDims& d) { return std::to_string(d.rows) + "x" + std::to_string(d.cols); }

inline void compare(ConsistencyReport& rep, const GridDims& dims, const char* kind, const char* a_name, long a,
                    const char* b_name, long b, bool defect) {
    if (a == b) return;
    rep.discrepancies.push_back({dims, kind,
                                 std::string(a_name) + "=" + std::to_string(a) + " " + b_name + "=" +
                                     std::to_string(b),
                                 defect});
}

}  // namespace detail

/// Evaluates every applicable method on each (m,n) in the ranges.
[[nodiscard]] inline ConsistencyReport consistency_report(const BroadcastParams& params, IntRange m_range,
                                                          IntRange n_range, const ReportOptions& opt = {}) {
    if (m_range.lo < 1 || n_range.lo < 1 || m_range.hi < m_range.lo || n_range.hi < n_range.lo)
        throw invalid_input("bad report ranges");
    ConsistencyReport rep{params, {}, {}, {}};
    for (int m = m_range.lo; m <= m_range.hi; ++m) {
        for (int n = n_range.lo; n <= n_range.hi; ++n) {
            const GridDims dims(m, n);
            InstanceComparison c{dims, {}, {}, {}, {}, {}, {}, {}};
            const Solution s = cached_solve(dims, params, opt.cache, opt.solver);
            c.dp = s.gamma;
            if (!is_dominating(dims, params, s.witness) || static_cast<int>(s.witness.size()) != s.gamma)
                rep.discrepancies.push_back({dims, "dp-witness", "witness does not certify gamma", true});

            if (opt.run_oracle && dims.cells() <= opt.oracle.max_cells) {
                c.oracle = brute_min(dims, params, opt.oracle).gamma;
                detail::compare(rep, dims, "dp-oracle", "dp", *c.dp, "oracle", *c.oracle, true);
            }

            if (auto fam = family_for(params, dims)) {
                const auto [f, len] = *fam;
                const FamilyCount count = family_count(f, len);
                c.formula = count.printed;
                c.recurrence = count.recurrence;
                const TowerSet set = family_set_for(f, len, dims);
                c.construction = static_cast<int>(set.size());
                if (!is_dominating(dims, params, set))
                    rep.discrepancies.push_back({dims, "construction-invalid", "family set does not dominate", true});
                detail::compare(rep, dims, "dp-formula", "dp", *c.dp, "formula", *c.formula, false);
                if (c.recurrence) {
                    detail::compare(rep, dims, "dp-recurrence", "dp", *c.dp, "recurrence", *c.recurrence, false);
                    detail::compare(rep, dims, "formula-recurrence", "formula", *c.formula, "recurrence",
                                    *c.recurrence, false);
                }
            } else if (has_bound_formula(params, dims) && std::max(m, n) <= opt.lattice_max_side &&
                       std::min(m, n) >= 6) {
                const auto built = construct_bound_set(params, dims, opt.corners);
                c.construction = static_cast<int>(built.towers.size());
                if (!is_dominating(dims, params, built.towers))
                    rep.discrepancies.push_back({dims, "construction-invalid", "lattice set does not dominate", true});
            }
            if (c.construction && *c.construction < *c.dp)
                rep.discrepancies.push_back({dims, "construction-below-dp",
                                             "construction " + std::to_string(*c.construction) + " < dp " +
                                                 std::to_string(*c.dp),
                                             true});

            if (has_bound_formula(params, dims)) {
                c.bound = bound_formula(params, dims);
                if (*c.bound < *c.dp)
                    rep.discrepancies.push_back({dims, "bound-below-dp",
                                                 "bound " + std::to_string(*c.bound) + " < dp " +
                                                     std::to_string(*c.dp),
                                                 false});
                if (c.construction && *c.construction > *c.bound)
                    rep.discrepancies.push_back({dims, "construction-above-bound",
                                                 "construction " + std::to_string(*c.construction) + " > bound " +
                                                     std::to_string(*c.bound),
                                                 false});
                rep.observations.push_back(detail::dims_str(dims) + ": bound - gamma = " + std::to_string(*c.slack()));
            }

            c.reference = reference_value(params, m, n);
            if (c.reference) detail::compare(rep, dims, "dp-reference", "dp", *c.dp, "reference", *c.reference, false);
            rep.instances.push_back(c);
        }
    }
    return rep;
}

enum class ProbeKind { reduction, tightness };

[[nodiscard]] inline ProbeKind parse_probe_kind(const std::string& s) {
    if (s == "reduction") return ProbeKind::reduction;
    if (s == "tightness") return ProbeKind::tightness;
    throw invalid_input("unknown probe \"" + s + "\" (reduction|tightness)");
}

struct ProbeObservation {
    GridDims dims;
    /// reduction: gamma_{t,r}; tightness: bound.
    long lhs = 0;
    /// reduction: gamma_{t-1,r-2}; tightness: gamma_{t,r}.
    long rhs = 0;
    [[nodiscard]] bool equal() const { return lhs == rhs; }
};

struct ProbeReport {
    ProbeKind kind = ProbeKind::reduction;
    BroadcastParams params;
    std::optional<BroadcastParams> reduced;
    std::vector<ProbeObservation> observations;

    [[nodiscard]] std::size_t equal_count() const {
        return static_cast<std::size_t>(
            std::count_if(observations.begin(), observations.end(), [](const auto& o) { return o.equal(); }));
    }
};

/// Observations over m <= n in the ranges; no claims are drawn.
[[nodiscard]] inline ProbeReport conjecture_probe(ProbeKind kind, const BroadcastParams& params, IntRange m_range,
                                                  IntRange n_range, const TableOptions& opt = {}) {
    ProbeReport rep{kind, params, std::nullopt, {}};
    if (kind == ProbeKind::reduction) {
        if (params.r < 3 || params.t < 2)
            throw invalid_input("the (t,r) vs (t-1,r-2) probe needs r >= 3 and t >= 2");
        rep.reduced = BroadcastParams(params.t - 1, params.r - 2);
    }
    for (int m = m_range.lo; m <= m_range.hi; ++m) {
        for (int n = std::max(m, n_range.lo); n <= n_range.hi; ++n) {
            const GridDims dims(m, n);
            if (kind == ProbeKind::tightness && !has_bound_formula(params, dims)) continue;
            const long gamma = cached_solve(dims, params, opt.cache, opt.solver).gamma;
            if (kind == ProbeKind::reduction)
                rep.observations.push_back({dims, gamma, cached_solve(dims, *rep.reduced, opt.cache, opt.solver).gamma});
            else
                rep.observations.push_back({dims, bound_formula(params, dims), gamma});
        }
    }
    return rep;
}

/// CSV with header m,n,gamma,method.
[[nodiscard]] inline std::string table_csv(const GammaTable& table) {
    std::string out = "m,n,gamma,method\n";
    for (const auto& e : table.entries)
        out += std::to_string(e.m) + "," + std::to_string(e.n) + "," + std::to_string(e.gamma) + "," +
               to_string(e.method) + "\n";
    return out;
}

/// Triangular layout: one row per m, columns n = 1..max_n.
[[nodiscard]] inline std::string table_ascii(const GammaTable& table) {
    int widest = 2;
    for (const auto& e : table.entries) widest = std::max(widest, static_cast<int>(std::to_string(e.gamma).size()));
    const int w = std::max(widest, static_cast<int>(std::to_string(std::max(table.max_m, table.max_n)).size())) + 1;
    auto pad = [w](const std::string& s) { return std::string(static_cast<std::size_t>(w) - s.size(), ' ') + s; };
    std::string out = pad("m\\n");
    for (int n = 1; n <= table.max_n; ++n) out += pad(std::to_string(n));
    out += "\n";
    std::size_t i = 0;
    for (int m = 1; m <= table.max_m; ++m) {
        out += pad(std::to_string(m));
        for (int n = 1; n <= std::min(m, table.max_n); ++n) out += pad(std::to_string(table.entries[i++].gamma));
        out += "\n";
    }
    return out;
}

}  // namespace bdom
