#pragma once

// The `bdom` command line. run_cli() is the whole program; the binary only
// forwards argv and the standard streams.
//
// Exit codes: 0 success / dominating, 1 negative verdict, 2 usage or invalid
// input, 3 feasibility refusal.

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bdom/bdom.hpp"

namespace bdom::cli {

enum Exit : int { ok = 0, negative = 1, usage = 2, refused = 3 };

struct GridFlags {
    int t = 0, r = 0, m = 0, n = 0;
};

inline void add_params(CLI::App* cmd, GridFlags& g, bool with_n = true) {
    cmd->add_option("--t", g.t, "transmission strength")->required();
    cmd->add_option("--r", g.r, "required reception")->required();
    cmd->add_option("--m", g.m, "rows")->required();
    if (with_n) cmd->add_option("--n", g.n, "columns")->required();
}

inline std::string placement_word(std::size_t k) { return k == 1 ? " placement" : " placements"; }

inline std::string vertex_list(const std::vector<Vertex>& vs) {
    std::string out;
    for (const auto& v : vs) out += (out.empty() ? "" : " ") + to_string(v);
    return out;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Broadcast domination numbers of grid graphs"};
    app.require_subcommand(1);
    std::string cache_flag;
    app.add_option("--cache", cache_flag, "result cache file (default: $BDOM_CACHE)");
    std::size_t max_states = SolverOptions{}.max_states;
    app.add_option("--max-states", max_states, "frontier size budget");

    GridFlags g;
    bool witness = false;
    std::string format;
    auto* solve_cmd = app.add_subcommand("solve", "exact domination number by frontier sweep");
    add_params(solve_cmd, g);
    solve_cmd->add_flag("--witness", witness, "also print an optimal tower set");
    solve_cmd->add_option("--format", format, "json|csv|ascii")->check(CLI::IsMember({"json", "csv", "ascii"}));

    std::string file;
    auto* verify_cmd = app.add_subcommand("verify", "check a tower-set document");
    verify_cmd->add_option("--file", file, "document path")->required();

    std::string pattern;
    bool refute = false, list = false;
    auto* mps_cmd = app.add_subcommand("mps", "placements of a column pattern passing both subpattern checks");
    add_params(mps_cmd, g, false);
    mps_cmd->add_option("--pattern", pattern, "column counts, e.g. 3-1-3")->required();
    mps_cmd->add_flag("--refute-smaller", refute, "test every smaller pattern of the same length");
    mps_cmd->add_flag("--list", list, "print each placement");

    std::string method;
    int window = 0, passes = CornerOptions{}.passes, max_window = 0;
    auto* construct_cmd = app.add_subcommand("construct", "explicit dominating set");
    add_params(construct_cmd, g);
    construct_cmd->add_option("--method", method, "family|lattice")
        ->required()
        ->check(CLI::IsMember({"family", "lattice"}));
    construct_cmd->add_option("--window", window, "corner block side (lattice)");
    construct_cmd->add_option("--passes", passes, "corner repair passes (lattice)");
    construct_cmd->add_option("--max-window", max_window, "also try corner blocks up to this side (lattice)");

    int max_m = 0, max_n = 0;
    unsigned threads = 0;
    std::string table_format = "csv";
    auto* table_cmd = app.add_subcommand("table", "lower-triangular table of domination numbers");
    table_cmd->add_option("--t", g.t)->required();
    table_cmd->add_option("--r", g.r)->required();
    table_cmd->add_option("--max-m", max_m)->required();
    table_cmd->add_option("--max-n", max_n)->required();
    table_cmd->add_option("--format", table_format, "csv|ascii")->check(CLI::IsMember({"csv", "ascii"}));
    table_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");

    auto* bound_cmd = app.add_subcommand("bound", "evaluate the lattice upper-bound formula");
    add_params(bound_cmd, g);

    IntRange mr{1, 1}, nr{1, 1};
    bool no_oracle = false;
    int lattice_side = ReportOptions{}.lattice_max_side;
    auto* report_cmd = app.add_subcommand("report", "cross-check every applicable method");
    report_cmd->add_option("--t", g.t)->required();
    report_cmd->add_option("--r", g.r)->required();
    report_cmd->add_option("--m-min", mr.lo)->required();
    report_cmd->add_option("--m-max", mr.hi)->required();
    report_cmd->add_option("--n-min", nr.lo)->required();
    report_cmd->add_option("--n-max", nr.hi)->required();
    report_cmd->add_flag("--no-oracle", no_oracle, "skip brute force");
    report_cmd->add_option("--lattice-max-side", lattice_side, "largest side for lattice constructions (0 = off)");

    std::string kind;
    auto* probe_cmd = app.add_subcommand("probe", "conjecture observations over m <= n");
    probe_cmd->add_option("--kind", kind, "reduction|tightness")
        ->required()
        ->check(CLI::IsMember({"reduction", "tightness"}));
    probe_cmd->add_option("--t", g.t)->required();
    probe_cmd->add_option("--r", g.r)->required();
    probe_cmd->add_option("--min-m", mr.lo);
    probe_cmd->add_option("--max-m", mr.hi)->required();
    probe_cmd->add_option("--min-n", nr.lo);
    probe_cmd->add_option("--max-n", nr.hi)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    std::unique_ptr<ResultCache> cache;
    if (!cache_flag.empty())
        cache = std::make_unique<ResultCache>(cache_flag, &err);
    else if (auto env = ResultCache::path_from_env())
        cache = std::make_unique<ResultCache>(*env, &err);
    SolverOptions sopt;
    sopt.max_states = max_states;

    try {
        if (*solve_cmd) {
            const BroadcastParams params(g.t, g.r);
            const GridDims dims(g.m, g.n);
            const Solution s = cached_solve(dims, params, cache.get(), sopt);
            const TowerSetDocument doc{params, dims, s.witness};
            if (format == "json") {
                auto j = to_json(doc);
                j["gamma"] = s.gamma;
                if (!witness) j.erase("towers");
                out << j.dump() << "\n";
            } else if (format == "csv") {
                out << "m,n,gamma,method\n" << g.m << "," << g.n << "," << s.gamma << ",dp\n";
                if (witness) out << towers_csv(s.witness);
            } else if (format == "ascii") {
                out << s.gamma << "\n" << render_ascii(dims, s.witness, reception_field(dims, params, s.witness));
            } else {
                out << s.gamma << "\n";
                if (witness) out << to_json(doc).dump() << "\n";
            }
            return ok;
        }
        if (*verify_cmd) {
            const auto doc = load_document(file);
            const auto missing = deficient_vertices(doc.dims, doc.params, doc.towers);
            if (missing.empty()) {
                out << "DOMINATING\n";
                return ok;
            }
            out << "NOT-DOMINATING\n" << "deficient: " << vertex_list(missing) << "\n";
            return negative;
        }
        if (*mps_cmd) {
            const BroadcastParams params(g.t, g.r);
            const Pattern p = Pattern::parse(pattern);
            const auto found = mps_search(g.m, params, p);
            out << found.size() << placement_word(found.size()) << "\n";
            if (list)
                for (const auto& s : found) out << towers_to_json(s).dump() << "\n";
            if (refute) {
                const auto rep = refute_smaller_patterns(g.m, params, p);
                for (const auto& v : rep.verdicts)
                    if (v.survivors) out << v.pattern.str() << ": " << v.survivors << placement_word(v.survivors) << "\n";
                out << rep.verdicts.size() << " smaller patterns checked; "
                    << (rep.minimal ? "minimal" : "not minimal") << "\n";
                return rep.minimal ? ok : negative;
            }
            return ok;
        }
        if (*construct_cmd) {
            const BroadcastParams params(g.t, g.r);
            const GridDims dims(g.m, g.n);
            TowerSet towers;
            if (method == "family") {
                const auto fam = family_for(params, dims);
                if (!fam) throw invalid_input("no family for " + to_string(params) + " on " + std::to_string(g.m) + "x" +
                                              std::to_string(g.n));
                towers = family_set_for(fam->first, fam->second, dims);
                out << "size " << towers.size() << "\n";
            } else {
                CornerOptions copt;
                copt.window = window;
                copt.passes = passes;
                copt.max_window = max_window;
                copt.solver = sopt;
                const auto built = construct_bound_set(params, dims, copt);
                towers = built.towers;
                out << "size " << towers.size() << "\n"
                    << "residue " << built.residue << "\n"
                    << "window " << built.window << "\n";
                for (const auto& c : built.corners)
                    out << "corner " << c.corner << " saving " << c.saving() << "\n";
            }
            if (!is_dominating(dims, params, towers)) throw std::logic_error("construction does not dominate");
            out << to_json(TowerSetDocument{params, dims, towers}).dump() << "\n";
            return ok;
        }
        if (*table_cmd) {
            TableOptions topt{sopt, threads, cache.get()};
            const auto table = reproduce_table(BroadcastParams(g.t, g.r), max_m, max_n, topt);
            out << (table_format == "ascii" ? table_ascii(table) : table_csv(table));
            return ok;
        }
        if (*bound_cmd) {
            out << bound_formula(BroadcastParams(g.t, g.r), GridDims(g.m, g.n)) << "\n";
            return ok;
        }
        if (*report_cmd) {
            ReportOptions ropt;
            ropt.solver = sopt;
            ropt.run_oracle = !no_oracle;
            ropt.lattice_max_side = lattice_side;
            ropt.cache = cache.get();
            const auto rep = consistency_report(BroadcastParams(g.t, g.r), mr, nr, ropt);
            auto opt_str = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
            out << "m,n,dp,oracle,formula,recurrence,construction,bound,reference\n";
            for (const auto& c : rep.instances)
                out << c.dims.rows << "," << c.dims.cols << "," << opt_str(c.dp) << "," << opt_str(c.oracle) << ","
                    << opt_str(c.formula) << "," << opt_str(c.recurrence) << "," << opt_str(c.construction) << ","
                    << opt_str(c.bound) << "," << opt_str(c.reference) << "\n";
            for (const auto& d : rep.discrepancies)
                out << (d.defect ? "DEFECT " : "finding ") << d.dims.rows << "x" << d.dims.cols << " " << d.kind
                    << ": " << d.detail << "\n";
            for (const auto& o : rep.observations) out << "observed " << o << "\n";
            return rep.has_defects() ? negative : ok;
        }
        if (*probe_cmd) {
            TableOptions topt{sopt, 1, cache.get()};
            const auto rep = conjecture_probe(parse_probe_kind(kind), BroadcastParams(g.t, g.r), mr, nr, topt);
            const bool red = rep.kind == ProbeKind::reduction;
            out << "m,n," << (red ? "gamma,reduced_gamma" : "bound,gamma") << ",equal\n";
            for (const auto& o : rep.observations)
                out << o.dims.rows << "," << o.dims.cols << "," << o.lhs << "," << o.rhs << ","
                    << (o.equal() ? "yes" : "no") << "\n";
            out << rep.equal_count() << " of " << rep.observations.size() << " equal\n";
            return ok;
        }
    } catch (const infeasible& e) {
        err << "infeasible: " << e.what() << "\n";
        return refused;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

}  // namespace bdom::cli
