#include "hlc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hlc/generator.hpp"
#include "hlc/io.hpp"
#include "hlc/oracle.hpp"
#include "hlc/solver_a.hpp"
#include "hlc/solver_b.hpp"

namespace hlc::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::SyntaxError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::SyntaxError, "cannot write '" + path + "'");
    out << content;
}

std::uint64_t brute_budget() {
    if (const char* env = std::getenv("HLC_BRUTE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultBruteBudget;
}

nlohmann::ordered_json stats_to_json(const Stats& s) {
    return nlohmann::ordered_json{
        {"nodes_total", s.nodes_total},
        {"nodes_phase1", s.nodes_phase1},
        {"nodes_phase2", s.nodes_phase2},
        {"depth_max", s.depth_max},
        {"derand_successes", s.derand_successes},
        {"probes", s.probes},
        {"probe_followups", s.probe_followups},
        {"cleanups", s.cleanups},
        {"branch_vertices", s.branch_vertices},
        {"recurrence_violations", s.recurrence_violations},
        {"runtime_ms", s.runtime_ms},
    };
}

SolveResult dispatch_solve(const Instance& inst, const std::string& alg, bool check_recurrences) {
    SolveOptions opts;
    opts.check_recurrences = check_recurrences;
    if (alg == "a") return solve_a(inst, opts);
    if (alg == "b") return solve_b(inst, SolverBMode::Full, opts);
    if (alg == "b-simplified") return solve_b(inst, SolverBMode::Simplified, opts);
    if (alg == "brute") return solve_brute(inst, brute_budget());
    throw Error(ErrorKind::PreconditionViolated, "unknown algorithm '" + alg + "'");
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::InternalInvariantViolation: return kExitInternalInvariant;
        case ErrorKind::BudgetExceeded: return kExitBudgetExceeded;
        default: return kExitInputError;
    }
}

struct BenchRow {
    std::string family;
    int size, n, k, c;
    std::uint64_t seed;
    std::string alg;
    std::string decision;
    Stats stats;
};

void print_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "family,size,n,k,c,seed,alg,decision,nodes_total,nodes_phase1,nodes_phase2,"
           "depth_max,derand_successes,probes,probe_followups,cleanups,branch_vertices,"
           "recurrence_violations,runtime_ms\n";
    for (const auto& r : rows) {
        const Stats& s = r.stats;
        out << r.family << ',' << r.size << ',' << r.n << ',' << r.k << ',' << r.c << ','
            << r.seed << ',' << r.alg << ',' << r.decision << ',' << s.nodes_total << ','
            << s.nodes_phase1 << ',' << s.nodes_phase2 << ',' << s.depth_max << ','
            << s.derand_successes << ',' << s.probes << ',' << s.probe_followups << ','
            << s.cleanups << ',' << s.branch_vertices << ',' << s.recurrence_violations << ','
            << s.runtime_ms << '\n';
    }
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hlc: list-coloring solver for hypergraphs whose edges miss at most c others"};
    app.require_subcommand(1);

    // validate
    std::string v_file;
    bool v_strict = false;
    auto* v = app.add_subcommand("validate", "check an instance file and print its parameters");
    v->add_option("file", v_file, "instance in HLC format")->required();
    v->add_flag("--strict", v_strict, "recompute c and fail when the declaration understates it");

    // solve
    std::string s_file, s_alg = "b", s_stats_path;
    bool s_check = false;
    auto* s = app.add_subcommand("solve", "decide list-colorability");
    s->add_option("file", s_file, "instance in HLC format")->required();
    s->add_option("--alg", s_alg, "a | b | b-simplified | brute")
        ->check(CLI::IsMember({"a", "b", "b-simplified", "brute"}));
    s->add_option("--stats-json", s_stats_path, "write recursion statistics to this file");
    s->add_flag("--check-recurrences", s_check, "assert the per-step volume-shrink clauses");

    // gen
    std::string g_kind, g_out;
    int g_n = 12, g_m = 10, g_k = 3, g_c = 0;
    std::uint64_t g_seed = 1;
    auto* g = app.add_subcommand("gen", "generate a reproducible instance");
    g->add_option("--kind", g_kind, "intersecting | c-intersecting | uncolorable")
        ->required()
        ->check(CLI::IsMember({"intersecting", "c-intersecting", "uncolorable"}));
    g->add_option("--n", g_n, "vertices");
    g->add_option("--m", g_m, "edges");
    g->add_option("--k", g_k, "colors");
    g->add_option("--c", g_c, "target intersection deficiency");
    g->add_option("--seed", g_seed, "PRNG seed");
    g->add_option("-o,--out", g_out, "output file")->required();

    // verify
    std::string vf_file, vf_coloring;
    auto* vf = app.add_subcommand("verify", "check a coloring file against an instance");
    vf->add_option("file", vf_file, "instance in HLC format")->required();
    vf->add_option("--coloring", vf_coloring, "solution file")->required();

    // bench
    std::string b_family = "c-intersecting", b_alg = "b", b_sizes_str;
    int b_n = 14, b_k = 3, b_c = 1, b_reps = 3;
    std::uint64_t b_seed = 1;
    auto* b = app.add_subcommand("bench", "run generated families and emit per-run statistics");
    b->add_option("--family", b_family, "intersecting | c-intersecting | uncolorable")
        ->check(CLI::IsMember({"intersecting", "c-intersecting", "uncolorable"}));
    b->add_option("--sizes", b_sizes_str, "comma-separated sizes (edge counts, or k for uncolorable)")
        ->required();
    b->add_option("--alg", b_alg, "a | b | b-simplified | brute")
        ->check(CLI::IsMember({"a", "b", "b-simplified", "brute"}));
    b->add_option("--n", b_n, "vertices for generated instances");
    b->add_option("--k", b_k, "colors");
    b->add_option("--c", b_c, "intersection deficiency for c-intersecting");
    b->add_option("--reps", b_reps, "instances per size");
    b->add_option("--seed", b_seed, "base PRNG seed");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (*v) {
            Instance inst = parse_instance(read_file(v_file));
            Params p = validate(inst);
            int c_actual = compute_c(inst);
            out << "OK n=" << p.n << " m=" << p.m << " k=" << inst.k << " nu=" << p.nu
                << " rho=" << p.rho << " kappa=" << p.kappa << " c_declared=" << inst.c_declared
                << " c_computed=" << c_actual << "\n";
            if (v_strict && c_actual > inst.c_declared)
                throw Error(ErrorKind::CNotRespected,
                            "computed c exceeds the declared value");
            return 0;
        }

        if (*s) {
            Instance inst = parse_instance(read_file(s_file));
            SolveResult res = dispatch_solve(inst, s_alg, s_check);
            if (!s_stats_path.empty()) write_file(s_stats_path, stats_to_json(res.stats).dump(2) + "\n");
            if (res.decision == Decision::Colorable) {
                out << render_solution(res.coloring);
                return kExitColorable;
            }
            out << render_solution(std::nullopt);
            return kExitUncolorable;
        }

        if (*g) {
            Instance inst;
            if (g_kind == "intersecting")
                inst = gen_intersecting(g_n, g_m, g_k, g_seed);
            else if (g_kind == "c-intersecting")
                inst = gen_c_intersecting(g_n, g_m, g_k, g_c, g_seed);
            else
                inst = gen_uncolorable(g_k, g_seed);
            std::ostringstream meta;
            meta << "# generated: kind=" << g_kind << " n=" << inst.n << " m=" << inst.m()
                 << " k=" << inst.k << " c=" << inst.c_declared << " seed=" << g_seed
                 << " rng=" << kGeneratorRngId << "\n";
            write_file(g_out, meta.str() + render_instance(inst));
            out << "wrote " << g_out << " (n=" << inst.n << " m=" << inst.m()
                << " c=" << inst.c_declared << ")\n";
            return 0;
        }

        if (*vf) {
            Instance inst = parse_instance(read_file(vf_file));
            validate(inst);
            Solution sol = parse_solution(read_file(vf_coloring), inst.n);
            if (!sol.colorable)
                throw Error(ErrorKind::PreconditionViolated,
                            "solution file declares UNCOLORABLE; nothing to verify");
            if (!is_proper_complete(inst, sol.coloring))
                throw Error(ErrorKind::PreconditionViolated,
                            "coloring is not a proper list coloring of the instance");
            out << "OK proper list coloring\n";
            return 0;
        }

        if (*b) {
            std::vector<int> sizes;
            std::stringstream ss(b_sizes_str);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) sizes.push_back(std::stoi(item));
            if (sizes.empty())
                throw Error(ErrorKind::PreconditionViolated, "--sizes must list at least one size");

            std::vector<BenchRow> rows;
            for (int size : sizes) {
                for (int rep = 0; rep < b_reps; ++rep) {
                    std::uint64_t seed = b_seed + static_cast<std::uint64_t>(rep) * 7919 +
                                         static_cast<std::uint64_t>(size) * 104729;
                    Instance inst;
                    if (b_family == "intersecting")
                        inst = gen_intersecting(b_n, size, b_k, seed);
                    else if (b_family == "c-intersecting")
                        inst = gen_c_intersecting(b_n, size, b_k, b_c, seed);
                    else
                        inst = gen_uncolorable(size, seed);
                    SolveResult res = dispatch_solve(inst, b_alg, true);
                    rows.push_back(BenchRow{
                        b_family, size, inst.n, inst.k, inst.c_declared, seed, b_alg,
                        res.decision == Decision::Colorable ? "COLORABLE" : "UNCOLORABLE",
                        res.stats});
                }
            }
            print_bench_csv(out, rows);
            return 0;
        }
    } catch (const Error& e) {
        err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace hlc::cli
