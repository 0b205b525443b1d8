#pragma once

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cliquepart/cliquepart.hpp"
#include "cliquepart/report_json.hpp"

namespace cliquepart::cli {

enum ExitCode : int { kOk = 0, kPropertyFailed = 1, kUsage = 2, kResourceLimit = 3 };

struct GlobalFlags {
    std::string output = "json";
    std::string out_file;
    std::uint64_t seed = 1;
    double time_limit = 60.0;
    unsigned threads = 0;
    std::uint64_t budget = kDefaultRsetBudget;

    [[nodiscard]] CensusOptions census() const { return {budget, threads}; }
    [[nodiscard]] std::chrono::milliseconds limit() const {
        return std::chrono::milliseconds(static_cast<std::int64_t>(time_limit * 1000.0));
    }
};

inline void print_text(const Json& j, std::ostream& out, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) print_text(*it, out, key);
        else out << key << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    }
}

inline void emit(const Json& j, const GlobalFlags& g, std::ostream& out) {
    if (g.output == "text") print_text(j, out);
    else out << j.dump(2) << '\n';
}

/// Writes the design to --out when given (and reports a summary), else to stdout.
inline void emit_design(const Design& d, const GlobalFlags& g, std::ostream& out) {
    if (g.out_file.empty()) {
        write_design(d, out);
        return;
    }
    write_design(d, g.out_file);
    emit(Json{{"report", kReportVersion}, {"label", d.label()}, {"n", d.n()}, {"r", d.r()}, {"blocks", d.size()},
              {"file", g.out_file}},
         g, out);
}

/// Order q of an inversive plane on n = q^2 + 1 points.
inline std::uint32_t order_from_points(std::uint32_t n) {
    std::uint32_t q = 0;
    while ((q + 1) * (q + 1) + 1 <= n) ++q;
    if (q * q + 1 != n) throw Error(ErrorCode::BadParams, "n = " + std::to_string(n) + " is not of the form q^2 + 1");
    return q;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Clique partitions of complete uniform hypergraphs: constructions, verification, bounds, search"};
    app.name("cliquepart");
    app.require_subcommand(1);
    GlobalFlags g;
    app.add_option("--output", g.output, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", g.out_file, "Write the produced design to FILE");
    app.add_option("--seed", g.seed, "Seed for sampled checks");
    app.add_option("--time-limit", g.time_limit, "Search time limit in seconds");
    app.add_option("--threads", g.threads, "Worker threads (0 = available parallelism)");
    app.add_option("--budget", g.budget, "Maximum r-sets in a coverage census");

    int code = kOk;
    const auto sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        auto* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // build
    auto* build = sub(&app, "build", "Construct a design");
    build->require_subcommand(1);
    std::uint64_t q = 0;
    std::uint32_t r = 0;
    auto* b_inv = sub(build, "inversive", "Inversive plane of order q = 3 (mod 4)");
    b_inv->add_option("--q", q)->required();
    b_inv->callback([&] { emit_design(InversivePlane::build(q).design(), g, out); });
    auto* b_cur = sub(build, "curves", "Polynomial curve family on q^2 points");
    b_cur->add_option("--q", q)->required();
    b_cur->add_option("--r", r)->required();
    b_cur->callback([&] { emit_design(CurveFamily::build(q, r).design(), g, out); });
    auto* b_con = sub(build, "conics", "Conic design in PG(2, q), r in {4, 5}");
    b_con->add_option("--q", q)->required();
    b_con->add_option("--r", r)->required();
    b_con->callback([&] {
        const auto cd = build_conic_design(q, r, g.census());
        if (!cd.matches_formula) code = kPropertyFailed;
        emit_design(cd.design, g, out);
    });
    std::string which = "s24";
    auto* b_witt = sub(build, "witt", "Witt designs from the extended Golay code");
    b_witt->add_option("--which", which)->check(CLI::IsMember({"s24", "s23", "s22"}));
    b_witt->callback([&] {
        const auto w = octad_designs(build_golay());
        emit_design(which == "s24" ? w.s24 : which == "s23" ? w.s23 : w.s22, g, out);
    });
    auto* b_s843 = sub(build, "s843", "Steiner system S(8, 4, 3)");
    b_s843->callback([&] { emit_design(build_s843(), g, out); });

    // verify
    std::string file, mode = "partition";
    bool axioms = false;
    std::uint64_t samples = 100000;
    auto* verify = sub(&app, "verify", "Coverage census of a design file");
    verify->add_option("--file", file)->required();
    verify->add_option("--mode", mode)->check(CLI::IsMember({"partition", "packing"}));
    verify->add_flag("--axioms", axioms, "Check the inversive-plane axioms (n = q^2 + 1, r = 3)");
    verify->add_option("--samples", samples, "Axiom-3 samples above order 7");
    verify->callback([&] {
        const Design d = read_design(file);
        if (axioms) {
            AxiomOptions opts;
            opts.seed = g.seed;
            opts.samples = samples;
            opts.census = g.census();
            const auto rep = verify_axioms(d, order_from_points(d.n()), opts);
            emit(to_json(rep), g, out);
            if (!rep.all()) code = kPropertyFailed;
            return;
        }
        const auto rep = verify_coverage(d, mode == "partition" ? CoverageMode::Partition : CoverageMode::Packing, g.census());
        emit(to_json(rep), g, out);
        if (!rep.passed()) code = kPropertyFailed;
    });

    // link
    Point v = 0;
    auto* link = sub(&app, "link", "Derived design at a point");
    link->add_option("--file", file)->required();
    link->add_option("--v", v)->required();
    link->callback([&] { emit_design(derive_link(read_design(file), v).design, g, out); });

    // bounds
    auto* bounds = sub(&app, "bounds", "Exact lower bounds");
    bounds->require_subcommand(1);
    std::uint64_t n = 0, lower = 0, qmax = 1000;
    auto* b_phi = sub(bounds, "phi", "phi(n, r) = C(n, r) / C(q + r - 1, r)");
    b_phi->add_option("--n", n)->required();
    b_phi->add_option("--r", r)->required();
    b_phi->callback([&] { emit(to_json(phi(n, r)), g, out); });
    auto* b_link = sub(bounds, "link", "Least x with x C(nL/x, r) <= C(n, r), L a lower bound on cp(n-1, r-1)");
    b_link->alias("theorem2");
    b_link->add_option("--n", n)->required();
    b_link->add_option("--r", r)->required();
    b_link->add_option("--L", lower, "Certified lower bound on cp(n-1, r-1)")->required();
    b_link->callback([&] {
        emit(Json{{"report", kReportVersion}, {"n", n}, {"r", r}, {"L", lower}, {"bound", link_lower_bound(n, r, lower).str()}, {"certified", true}},
             g, out);
    });
    auto* b_sieve = sub(bounds, "qsieve", "Divisibility sieve Q_r");
    b_sieve->add_option("--r", r)->required();
    b_sieve->add_option("--qmax", qmax);
    b_sieve->callback([&] {
        const auto prof = qr_sieve(r, qmax);
        emit(Json{{"report", kReportVersion}, {"r", prof.r}, {"q_max", prof.q_max}, {"Q", prof.admissible}}, g, out);
    });
    auto* b_table = sub(bounds, "table", "Known exact values of cp(n, r)");
    b_table->callback([&] {
        Json rows = Json::array();
        for (const auto& e : known_cp_table()) rows.push_back({{"n", e.n}, {"r", e.r}, {"cp", e.cp}, {"source", e.source}});
        emit(Json{{"report", kReportVersion}, {"table", rows}, {"cp(n,2)", "n"}}, g, out);
    });
    auto* b_id = sub(bounds, "identity", "Check phi(n,r)(q+r-1) = n phi(n-1,r-1) exactly");
    b_id->add_option("--n", n)->required();
    b_id->add_option("--r", r)->required();
    b_id->callback([&] {
        const bool ok = identity_check_phi(n, r);
        emit(Json{{"report", kReportVersion}, {"n", n}, {"r", r}, {"holds", ok}}, g, out);
        if (!ok) code = kPropertyFailed;
    });

    // z
    auto* z = sub(&app, "z", "Zarankiewicz numbers");
    z->require_subcommand(1);
    auto* z_equal = sub(z, "equal-blocks", "Certified z(m, n, 2, r) from an equal-block partition");
    z_equal->alias("lemma7");
    z_equal->add_option("--file", file)->required();
    z_equal->callback([&] {
        const auto rep = z_from_equal_blocks(read_design(file));
        emit(to_json(rep), g, out);
        if (!rep.meets) code = kPropertyFailed;
    });
    std::uint32_t zm = 0, zn = 0, zs = 0, zt = 0;
    auto* z_brute = sub(z, "brute", "Exact z(m, n, s, t) by search");
    z_brute->add_option("--m", zm)->required();
    z_brute->add_option("--n", zn)->required();
    z_brute->add_option("--s", zs)->required();
    z_brute->add_option("--t", zt)->required();
    z_brute->callback([&] {
        const auto inst = brute_z(zm, zn, zs, zt, g.limit());
        emit(to_json(inst), g, out);
        if (!inst.exact) code = kResourceLimit;
    });
    auto* z_conv = sub(z, "convexity", "Upper bound on z(m, n, 2, r)");
    z_conv->add_option("--m", zm)->required();
    z_conv->add_option("--n", zn)->required();
    z_conv->add_option("--r", r)->required();
    z_conv->callback([&] {
        emit(Json{{"report", kReportVersion}, {"m", zm}, {"n", zn}, {"r", r}, {"upper_bound", convexity_upper_bound(zm, zn, r)}}, g, out);
    });

    // search
    auto* search = sub(&app, "search", "Exact search and completion");
    search->require_subcommand(1);
    std::string seed_file, oracle = "phi";
    std::uint32_t max_block = 0;
    auto* s_cp = sub(search, "cp", "Certified cp(n, r) for small instances");
    s_cp->add_option("--n", zn)->required();
    s_cp->add_option("--r", r)->required();
    s_cp->add_option("--seed", seed_file, "Design file used as the initial upper bound");
    s_cp->add_option("--max-block", max_block);
    s_cp->add_option("--oracle", oracle)->check(CLI::IsMember({"phi", "link", "theorem2", "none"}));
    s_cp->callback([&] {
        SearchConfig cfg;
        cfg.n = zn;
        cfg.r = r;
        cfg.max_block_size = max_block;
        cfg.time_limit = g.limit();
        cfg.lower_bound_oracle = oracle == "phi" ? LowerBoundOracle::Phi
                                 : (oracle == "link" || oracle == "theorem2") ? LowerBoundOracle::LinkBound
                                                        : LowerBoundOracle::None;
        if (!seed_file.empty()) cfg.upper_bound_seed = read_design(seed_file);
        const auto res = solve_cp(cfg);
        auto j = to_json(res);
        if (!g.out_file.empty()) {
            write_design(res.certificate, g.out_file);
            j["certificate_file"] = g.out_file;
        } else {
            j["certificate"] = design_to_string(res.certificate);
        }
        emit(j, g, out);
        if (res.timed_out) code = kResourceLimit;
    });
    auto* s_complete = sub(search, "complete", "Greedy completion of a packing (heuristic)");
    s_complete->add_option("--file", file)->required();
    s_complete->callback([&] {
        const auto res = greedy_complete(read_design(file), g.census());
        if (g.out_file.empty()) {
            write_design(res.design, out);
            return;
        }
        write_design(res.design, g.out_file);
        emit(Json{{"report", kReportVersion}, {"heuristic", true}, {"blocks", res.design.size()}, {"added", res.added},
                  {"reference_n_pow_r_half", res.reference}, {"file", g.out_file}},
             g, out);
    });

    std::vector<const char*> argv{"cliquepart"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.is_resource_limit()) return kResourceLimit;
        if (e.code() == ErrorCode::ConstructionFailed) return kPropertyFailed;
        return kUsage;
    }
    return code;
}

}  // namespace cliquepart::cli
