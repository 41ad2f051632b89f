#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "coresat/bench.hpp"
#include "coresat/dimacs.hpp"
#include "coresat/solver.hpp"

namespace {

struct SolveArgs {
    std::string file;
    std::string mode = "hybrid";
    uint64_t theta = 2'000'000;
    uint32_t core_lbd = 7;
    std::string proof_path;
    uint64_t max_conflicts = 0;
    bool has_max_conflicts = false;
    uint64_t seed = 0;
    bool stats = false;
};

coresat::Mode parse_mode(const std::string& name) {
    if (name == "bcp") return coresat::Mode::Bcp;
    if (name == "cfup") return coresat::Mode::Cfup;
    return coresat::Mode::Hybrid;
}

void print_stats(const coresat::SearchStats& st) {
    std::cout << "c conflicts    " << st.conflicts << '\n'
              << "c decisions    " << st.decisions << '\n'
              << "c propagations " << st.propagations << '\n'
              << "c restarts     " << st.restarts << '\n'
              << "c learnt-core  " << st.learnt_core << '\n'
              << "c time-seconds " << st.cpu_time << '\n';
}

void print_model(const std::vector<bool>& model) {
    size_t per_line = 0;
    std::cout << "v";
    for (size_t i = 0; i < model.size(); ++i) {
        if (per_line == 20) {
            std::cout << "\nv";
            per_line = 0;
        }
        std::cout << ' ' << (model[i] ? static_cast<long>(i) + 1 : -(static_cast<long>(i) + 1));
        ++per_line;
    }
    std::cout << " 0\n";
}

int do_solve(const SolveArgs& args) {
    coresat::Formula f = coresat::parse_dimacs_file(args.file);

    coresat::SolverConfig cfg;
    cfg.mode = parse_mode(args.mode);
    cfg.theta = args.theta;
    cfg.core_lbd_threshold = args.core_lbd;
    cfg.rng_seed = args.seed;
    if (args.has_max_conflicts) cfg.max_conflicts = args.max_conflicts;

    std::ofstream proof_file;
    coresat::Solver solver(f, cfg);
    if (!args.proof_path.empty()) {
        proof_file.open(args.proof_path);
        if (!proof_file) throw std::runtime_error("cannot write proof file '" + args.proof_path + "'");
        solver.proof().set_sink(&proof_file);
    }

    coresat::Result res = solver.solve();
    if (args.stats) print_stats(solver.stats());
    switch (res.status) {
        case coresat::Status::Sat:
            std::cout << "s SATISFIABLE\n";
            print_model(res.model);
            return 10;
        case coresat::Status::Unsat:
            std::cout << "s UNSATISFIABLE\n";
            return 20;
        default:
            std::cout << "s UNKNOWN\n";
            return 0;
    }
}

int do_bench(const coresat::BenchOptions& opt) {
    coresat::BenchResult result = coresat::run_bench(opt);
    std::cout << result.summary;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CDCL SAT solver with core-first unit propagation"};
    app.require_subcommand(1);

    SolveArgs sargs;
    CLI::App* solve = app.add_subcommand("solve", "Solve one DIMACS CNF instance");
    solve->add_option("file", sargs.file, "CNF input file")->required();
    solve->add_option("--mode", sargs.mode, "Propagation mode")
        ->check(CLI::IsMember({"bcp", "cfup", "hybrid"}))
        ->capture_default_str();
    solve->add_option("--theta", sargs.theta, "Conflict count at which hybrid mode stops core-first scans")
        ->capture_default_str();
    solve->add_option("--core-lbd", sargs.core_lbd, "Largest LBD still considered core")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    solve->add_option("--proof", sargs.proof_path, "Write a DRAT proof to this file");
    auto* mc = solve->add_option("--max-conflicts", sargs.max_conflicts,
                                 "Give up (UNKNOWN) after this many conflicts");
    solve->add_option("--seed", sargs.seed, "Random seed")->capture_default_str();
    solve->add_flag("--stats", sargs.stats, "Print counter lines before the result");

    coresat::BenchOptions bopt;
    CLI::App* bench = app.add_subcommand("bench", "Run every *.cnf in a directory under several configs");
    bench->add_option("--dir", bopt.dir, "Instance directory")->required();
    bench->add_option("--timeout", bopt.timeout_seconds, "Per-instance timeout in seconds")
        ->capture_default_str();
    bench->add_option("--configs", bopt.configs, "Comma-separated configs: base | theta=N")
        ->capture_default_str();
    bench->add_option("--out", bopt.out_csv, "Results CSV path")->required();
    bench->add_option("--scatter", bopt.scatter_csv,
                      "Scatter CSV base path (one file per non-base config)");
    bench->add_option("--jobs", bopt.jobs, "Concurrent instances")->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", bopt.seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) {
            sargs.has_max_conflicts = mc->count() > 0;
            return do_solve(sargs);
        }
        return do_bench(bopt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
