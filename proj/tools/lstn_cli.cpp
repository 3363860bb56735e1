// Command-line front end: solve instances, sweep benchmark families, generate
// instances, render SVG pictures, and verify the ratio-analysis constants.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lstn/bounds.hpp"
#include "lstn/error.hpp"
#include "lstn/generators.hpp"
#include "lstn/instance_io.hpp"
#include "lstn/oracle.hpp"
#include "lstn/render.hpp"
#include "lstn/theory.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt(*v) : std::string("n/a");
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

json solution_to_json(const lstn::Solution& sol, const lstn::BoundsReport& bounds,
                      const std::string& algo) {
    json js;
    js["algo"] = algo;
    js["producer"] = lstn::producer_tag(sol.producer);
    js["length"] = sol.length;
    js["certified_ratio"] = lstn::certified_ratio(sol, bounds);
    js["selection"] = sol.selection.vertex_indices;
    json pts = json::array();
    for (const auto& p : sol.selection.points) pts.push_back(p);
    js["points"] = std::move(pts);
    json edges = json::array();
    for (const auto& [u, v] : sol.tree.edges) edges.push_back(json::array({u, v}));
    js["edges"] = std::move(edges);
    return js;
}

json bounds_to_json(const lstn::BoundsReport& b) {
    json jb;
    jb["degenerate"] = b.degenerate;
    jb["D"] = b.D;
    jb["y"] = b.y;
    jb["R_y"] = b.R_y;
    jb["x"] = b.x ? json(*b.x) : json(nullptr);
    jb["z_hat"] = b.z_hat ? json(*b.z_hat) : json(nullptr);
    jb["ub_trivial"] = b.ub_trivial;
    jb["ub_dmax"] = b.ub_dmax;
    jb["ub_omega"] = b.ub_omega ? json(*b.ub_omega) : json(nullptr);
    jb["ub_refined"] = b.ub_refined ? json(*b.ub_refined) : json(nullptr);
    jb["ub_best"] = b.ub_best;
    return jb;
}

void print_solution_text(const std::string& algo, const lstn::Solution& sol,
                         const lstn::BoundsReport& bounds) {
    std::cout << "algo=" << algo << " producer=" << lstn::producer_tag(sol.producer)
              << " length=" << fmt(sol.length)
              << " certified_ratio=" << fmt(lstn::certified_ratio(sol, bounds)) << "\n";
    std::cout << "  selection:";
    for (std::size_t v : sol.selection.vertex_indices) std::cout << " " << v;
    std::cout << "\n  edges:";
    for (const auto& [u, v] : sol.tree.edges) std::cout << " (" << u << "," << v << ")";
    std::cout << "\n";
}

int run_solve(const std::string& path, const std::string& algo, std::uint64_t budget,
              const std::string& out_path) {
    const lstn::Instance inst = lstn::read_instance(path);
    const lstn::NormalizedView view = lstn::normalize(inst);
    const lstn::BoundsReport bounds = lstn::compute_bounds(inst);

    std::cout << "instance: " << path << "\n";
    std::cout << "n=" << inst.n() << " N=" << inst.total_vertices() << " dim=" << inst.dim
              << "\n";
    std::cout << "D=" << fmt(bounds.D) << " pair=(region " << view.diam_pair.region_a
              << " vertex " << view.diam_pair.vertex_a << " -- region " << view.diam_pair.region_b
              << " vertex " << view.diam_pair.vertex_b << ")\n";
    std::cout << "degenerate=" << (bounds.degenerate ? "true" : "false") << "\n";
    std::cout << "y=" << fmt(bounds.y) << " R_y=" << fmt(bounds.R_y) << " x=" << fmt_opt(bounds.x)
              << " z_hat=" << fmt_opt(bounds.z_hat) << "\n";
    std::cout << "bounds: trivial=" << fmt(bounds.ub_trivial) << " dmax=" << fmt(bounds.ub_dmax)
              << " omega=" << fmt_opt(bounds.ub_omega) << " refined=" << fmt_opt(bounds.ub_refined)
              << " best=" << fmt(bounds.ub_best) << "\n";
    if (!bounds.degenerate) {
        std::cout << "bounds/D: trivial=" << fmt(bounds.ub_trivial / bounds.D)
                  << " dmax=" << fmt(bounds.ub_dmax / bounds.D) << " omega="
                  << (bounds.ub_omega ? fmt(*bounds.ub_omega / bounds.D) : std::string("n/a"))
                  << " refined="
                  << (bounds.ub_refined ? fmt(*bounds.ub_refined / bounds.D) : std::string("n/a"))
                  << " best=" << fmt(bounds.ub_best / bounds.D) << "\n";
    }

    std::vector<std::pair<std::string, lstn::Solution>> solutions;
    std::vector<std::string> skipped;
    const bool want_all = algo == "all";
    if (want_all || algo == "a1") solutions.emplace_back("a1", lstn::algo_a1(inst));
    if (want_all || algo == "a2") solutions.emplace_back("a2", lstn::algo_a2(inst, budget));
    if (want_all || algo == "exact") {
        if (want_all && lstn::count_selections(inst) > budget) {
            skipped.push_back("exact: selection space " +
                              std::to_string(lstn::count_selections(inst)) + " exceeds budget " +
                              std::to_string(budget));
        } else {
            solutions.emplace_back("exact", lstn::exact_opt(inst, budget));
        }
    }

    for (const auto& [name, sol] : solutions) print_solution_text(name, sol, bounds);
    for (const auto& msg : skipped) std::cout << "skipped " << msg << "\n";

    if (want_all) {
        std::cout << "comparison:\n";
        std::cout << "  algo   length                  certified_ratio\n";
        for (const auto& [name, sol] : solutions) {
            char line[160];
            std::snprintf(line, sizeof(line), "  %-6s %-23s %s\n", name.c_str(),
                          fmt(sol.length).c_str(),
                          fmt(lstn::certified_ratio(sol, bounds)).c_str());
            std::cout << line;
        }
    }

    if (!out_path.empty()) {
        json report;
        report["instance"] =
            json{{"path", path}, {"n", inst.n()}, {"N", inst.total_vertices()}, {"dim", inst.dim}};
        report["bounds"] = bounds_to_json(bounds);
        json sols = json::array();
        for (const auto& [name, sol] : solutions) {
            sols.push_back(solution_to_json(sol, bounds, name));
        }
        report["solutions"] = std::move(sols);
        report["skipped"] = skipped;
        write_text_file(out_path, report.dump(2) + "\n");
    }
    return 0;
}

struct BenchRow {
    std::string id;
    std::size_t n = 0;
    std::size_t N = 0;
    double len_a1 = 0.0;
    double len_a2 = 0.0;
    std::optional<double> exact;
    double ub_best = 0.0;
    std::optional<double> ratio_vs_exact;
    double certified = 0.0;
};

BenchRow bench_one(const std::string& id, const lstn::Instance& inst, std::uint64_t budget) {
    BenchRow row;
    row.id = id;
    row.n = inst.n();
    row.N = inst.total_vertices();
    const lstn::BoundsReport bounds = lstn::compute_bounds(inst);
    const lstn::Solution a1 = lstn::algo_a1(inst);
    const lstn::Solution a2 = lstn::algo_a2(inst, budget);
    row.len_a1 = a1.length;
    row.len_a2 = a2.length;
    row.ub_best = bounds.ub_best;
    row.certified = lstn::certified_ratio(a2, bounds);
    if (lstn::count_selections(inst) <= budget) {
        const lstn::Solution exact = lstn::exact_opt(inst, budget);
        row.exact = exact.length;
        row.ratio_vs_exact = exact.length == 0.0 ? 1.0 : a2.length / exact.length;
    }
    return row;
}

int run_bench(const std::string& family, std::size_t count, std::size_t max_n, std::size_t max_k,
              std::size_t dim, std::uint64_t seed, const std::string& n_list, double eps,
              std::uint64_t budget, const std::string& out_path) {
    std::vector<BenchRow> rows;
    if (family == "random") {
        std::mt19937_64 master(seed);
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t n = 2 + static_cast<std::size_t>(master() % (max_n - 1));
            const std::uint64_t sub_seed = master();
            const lstn::Instance inst = lstn::gen_random(n, max_k, dim, sub_seed);
            rows.push_back(bench_one("random-" + std::to_string(i), inst, budget));
        }
    } else {  // tight
        std::vector<std::size_t> sizes;
        std::stringstream ss(n_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) sizes.push_back(static_cast<std::size_t>(std::stoull(item)));
        }
        for (std::size_t n : sizes) {
            const double e = eps > 0.0 ? eps : 1.0 / static_cast<double>(n - 1);
            const lstn::Instance inst = lstn::gen_tight(n, e);
            rows.push_back(bench_one("tight-n" + std::to_string(n), inst, budget));
        }
    }

    std::string csv = "id,n,N,len_a1,len_a2,exact,ub_best,ratio_vs_exact,certified_ratio\n";
    double min_ratio = 0.0, min_cert = 0.0;
    bool have_ratio = false, have_row = false;
    for (const auto& row : rows) {
        csv += row.id + "," + std::to_string(row.n) + "," + std::to_string(row.N) + "," +
               fmt(row.len_a1) + "," + fmt(row.len_a2) + "," +
               (row.exact ? fmt(*row.exact) : "") + "," + fmt(row.ub_best) + "," +
               (row.ratio_vs_exact ? fmt(*row.ratio_vs_exact) : "") + "," + fmt(row.certified) +
               "\n";
        if (row.ratio_vs_exact) {
            min_ratio = have_ratio ? std::min(min_ratio, *row.ratio_vs_exact) : *row.ratio_vs_exact;
            have_ratio = true;
        }
        min_cert = have_row ? std::min(min_cert, row.certified) : row.certified;
        have_row = true;
    }
    if (have_row) {
        csv += "summary_min,,,,,,," + (have_ratio ? fmt(min_ratio) : std::string()) + "," +
               fmt(min_cert) + "\n";
    }

    if (out_path.empty()) {
        std::cout << csv;
    } else {
        write_text_file(out_path, csv);
        std::cout << "wrote " << out_path << " (" << rows.size() << " instances)\n";
    }
    return 0;
}

int run_gen(const std::string& family, std::size_t n, double eps, std::size_t k_max,
            std::size_t dim, std::uint64_t seed, const std::string& out_path) {
    lstn::Instance inst;
    if (family == "example-star") {
        inst = lstn::gen_example_star();
    } else if (family == "example-greedy") {
        inst = lstn::gen_example_greedy();
    } else if (family == "tight") {
        const double e = eps > 0.0 ? eps : 1.0 / static_cast<double>(n - 1);
        inst = lstn::gen_tight(n, e);
    } else {  // random
        inst = lstn::gen_random(n, k_max, dim, seed);
    }
    if (out_path.empty()) {
        std::cout << lstn::serialize_instance(inst);
    } else {
        lstn::write_instance(inst, out_path);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int run_render(const std::string& path, const std::string& algo, std::uint64_t budget,
               const std::string& out_path) {
    const lstn::Instance inst = lstn::read_instance(path);
    std::string svg;
    if (algo == "none") {
        svg = lstn::render_svg(inst, nullptr);
    } else {
        lstn::Solution sol;
        if (algo == "a1") {
            sol = lstn::algo_a1(inst);
        } else if (algo == "a2") {
            sol = lstn::algo_a2(inst, budget);
        } else {
            sol = lstn::exact_opt(inst, budget);
        }
        svg = lstn::render_svg(inst, &sol);
    }
    write_text_file(out_path, svg);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int run_verify_theory(double grid_step, bool self_test) {
    const double perturb = self_test ? 1e-3 : 0.0;
    const auto checks = lstn::verify_theory(grid_step, perturb);
    std::size_t failed = 0;
    std::printf("%-36s %-24s %-24s %-10s %s\n", "check", "value", "expected", "tol", "status");
    for (const auto& chk : checks) {
        std::printf("%-36s %-24s %-24s %-10s %s\n", chk.name.c_str(), fmt(chk.value).c_str(),
                    fmt(chk.expected).c_str(), fmt(chk.tolerance).c_str(),
                    chk.pass ? "PASS" : "FAIL");
        if (!chk.pass) ++failed;
    }
    std::printf("result: %zu/%zu checks passed\n", checks.size() - failed, checks.size());
    if (self_test) {
        if (failed > 0) {
            std::printf("self-test: injected perturbation detected (%zu failing checks)\n",
                        failed);
            return 0;
        }
        std::printf("self-test: injected perturbation NOT detected\n");
        return 1;
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longest spanning tree with neighborhoods: approximation algorithms, "
                 "certified bounds, exact oracle, generators"};
    app.require_subcommand(1);

    // solve
    std::string solve_path, solve_algo = "all", solve_out;
    std::uint64_t solve_budget = lstn::kDefaultOracleBudget;
    auto* solve = app.add_subcommand("solve", "solve an instance file and report bounds");
    solve->add_option("instance", solve_path, "instance JSON file")->required();
    solve->add_option("--algo", solve_algo, "algorithm: a1, a2, exact, all")
        ->check(CLI::IsMember({"a1", "a2", "exact", "all"}));
    solve->add_option("--budget", solve_budget, "max selections for the exact oracle");
    solve->add_option("--out", solve_out, "write a JSON report to this path");

    // bench
    std::string bench_family = "random", bench_nlist = "10,20,50,100", bench_out;
    std::size_t bench_count = 200, bench_max_n = 7, bench_max_k = 3, bench_dim = 2;
    std::uint64_t bench_seed = 1, bench_budget = lstn::kDefaultOracleBudget;
    double bench_eps = 0.0;
    auto* bench = app.add_subcommand("bench", "sweep an instance family, write a CSV table");
    bench->add_option("--family", bench_family, "family: random, tight")
        ->check(CLI::IsMember({"random", "tight"}));
    bench->add_option("--count", bench_count, "number of random instances");
    bench->add_option("--max-n", bench_max_n, "max regions per random instance (>= 2)");
    bench->add_option("--max-k", bench_max_k, "max vertices per region");
    bench->add_option("--dim", bench_dim, "ambient dimension");
    bench->add_option("--seed", bench_seed, "master seed");
    bench->add_option("--n-list", bench_nlist, "tight family sizes, comma-separated");
    bench->add_option("--eps", bench_eps, "tight family eps (default 1/(n-1))");
    bench->add_option("--budget", bench_budget, "max selections for the exact oracle");
    bench->add_option("--out", bench_out, "CSV output path (default: stdout)");

    // gen
    std::string gen_family, gen_out;
    std::size_t gen_n = 10, gen_kmax = 3, gen_dim = 2;
    std::uint64_t gen_seed = 1;
    double gen_eps = 0.0;
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->add_option("--family", gen_family,
                    "family: example-star, example-greedy, tight, random")
        ->required()
        ->check(CLI::IsMember({"example-star", "example-greedy", "tight", "random"}));
    gen->add_option("--n", gen_n, "number of regions");
    gen->add_option("--eps", gen_eps, "tight family eps (default 1/(n-1))");
    gen->add_option("--k-max", gen_kmax, "max vertices per region (random family)");
    gen->add_option("--dim", gen_dim, "ambient dimension (random family)");
    gen->add_option("--seed", gen_seed, "random family seed");
    gen->add_option("--out", gen_out, "output path (default: stdout)");

    // render
    std::string render_path, render_algo = "none", render_out;
    std::uint64_t render_budget = lstn::kDefaultOracleBudget;
    auto* render = app.add_subcommand("render", "render a 2d instance (and a solution) as SVG");
    render->add_option("instance", render_path, "instance JSON file")->required();
    render->add_option("--algo", render_algo, "solution to draw: none, a1, a2, exact")
        ->check(CLI::IsMember({"none", "a1", "a2", "exact"}));
    render->add_option("--budget", render_budget, "max selections for the exact oracle");
    render->add_option("--out", render_out, "SVG output path")->required();

    // verify-theory
    double verify_step = 1e-3;
    bool verify_selftest = false;
    auto* verify = app.add_subcommand("verify-theory",
                                      "numerically verify the ratio-analysis constants");
    verify->add_option("--grid-step", verify_step, "grid step for the minimization (<= 1e-3)");
    verify->add_flag("--self-test", verify_selftest,
                     "inject a perturbed constant and require the checks to catch it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(solve_path, solve_algo, solve_budget, solve_out);
        if (bench->parsed()) {
            return run_bench(bench_family, bench_count, bench_max_n, bench_max_k, bench_dim,
                             bench_seed, bench_nlist, bench_eps, bench_budget, bench_out);
        }
        if (gen->parsed()) {
            return run_gen(gen_family, gen_n, gen_eps, gen_kmax, gen_dim, gen_seed, gen_out);
        }
        if (render->parsed()) {
            return run_render(render_path, render_algo, render_budget, render_out);
        }
        if (verify->parsed()) return run_verify_theory(verify_step, verify_selftest);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
