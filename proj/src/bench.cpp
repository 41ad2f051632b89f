#include "coresat/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "coresat/dimacs.hpp"
#include "coresat/solver.hpp"

namespace coresat {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::string format_seconds(double s) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << s;
    return out.str();
}

} // namespace

std::vector<BenchConfig> parse_bench_configs(const std::string& text) {
    std::vector<BenchConfig> configs;
    std::stringstream ss(text);
    std::string entry;
    while (std::getline(ss, entry, ',')) {
        entry = trim(entry);
        if (entry.empty()) continue;
        BenchConfig bc;
        bc.name = entry;
        if (entry == "base") {
            bc.solver.mode = Mode::Bcp;
        } else if (entry.rfind("theta=", 0) == 0) {
            const std::string num = entry.substr(6);
            char* end = nullptr;
            double v = std::strtod(num.c_str(), &end);
            if (num.empty() || end != num.c_str() + num.size() || v < 0 || v > 1e18) {
                throw std::invalid_argument("bad theta value in config '" + entry + "'");
            }
            bc.solver.mode = Mode::Hybrid;
            bc.solver.theta = static_cast<uint64_t>(v);
        } else {
            throw std::invalid_argument("unknown config '" + entry +
                                        "' (expected \"base\" or \"theta=N\")");
        }
        configs.push_back(std::move(bc));
    }
    if (configs.empty()) throw std::invalid_argument("empty config list");
    return configs;
}

BenchResult run_bench(const BenchOptions& opt) {
    BenchResult result;
    result.configs = parse_bench_configs(opt.configs);

    std::error_code ec;
    fs::directory_iterator dir_it(opt.dir, ec);
    if (ec) throw std::runtime_error("cannot read directory '" + opt.dir + "': " + ec.message());
    std::vector<fs::path> paths;
    for (const auto& entry : dir_it) {
        if (entry.is_regular_file() && entry.path().extension() == ".cnf") {
            paths.push_back(entry.path());
        }
    }
    std::sort(paths.begin(), paths.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    std::vector<Formula> formulas;
    formulas.reserve(paths.size());
    for (const auto& p : paths) {
        result.instances.push_back(p.filename().string());
        formulas.push_back(parse_dimacs_file(p.string()));
    }

    const size_t num_configs = result.configs.size();
    result.cells.assign(result.instances.size(), std::vector<BenchCell>(num_configs));

    // Flat task list, claimed by a shared counter; every task touches only
    // its own cell, so no further synchronization is needed.
    const size_t total = result.instances.size() * num_configs;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t t = next.fetch_add(1);
            if (t >= total) return;
            size_t inst = t / num_configs;
            size_t cfg_idx = t % num_configs;
            SolverConfig cfg = result.configs[cfg_idx].solver;
            cfg.max_seconds = opt.timeout_seconds;
            cfg.rng_seed = opt.seed;
            Solver solver(formulas[inst], cfg);
            Result res = solver.solve();
            BenchCell& cell = result.cells[inst][cfg_idx];
            cell.status = res.status;
            cell.seconds = solver.stats().cpu_time;
            cell.conflicts = solver.stats().conflicts;
        }
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || total <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    result.summary = format_bench_summary(result);

    if (!opt.out_csv.empty()) {
        std::ofstream out(opt.out_csv);
        if (!out) throw std::runtime_error("cannot write '" + opt.out_csv + "'");
        out << results_csv(result);
    }
    if (!opt.scatter_csv.empty()) {
        for (size_t c = 1; c < num_configs; ++c) {
            std::string path = scatter_file_path(opt.scatter_csv, result.configs[c].name);
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot write '" + path + "'");
            out << scatter_csv(result, c, opt.timeout_seconds);
        }
    }
    return result;
}

std::string results_csv(const BenchResult& r) {
    std::ostringstream out;
    out << "instance,config,status,seconds,conflicts\n";
    for (size_t i = 0; i < r.instances.size(); ++i) {
        for (size_t c = 0; c < r.configs.size(); ++c) {
            const BenchCell& cell = r.cells[i][c];
            out << r.instances[i] << ',' << r.configs[c].name << ',' << to_string(cell.status)
                << ',' << format_seconds(cell.seconds) << ',' << cell.conflicts << '\n';
        }
    }
    return out.str();
}

std::string scatter_csv(const BenchResult& r, size_t config_idx, double timeout_seconds) {
    auto plotted = [&](const BenchCell& cell) {
        return cell.status == Status::Unknown ? timeout_seconds
                                              : std::min(cell.seconds, timeout_seconds);
    };
    std::ostringstream out;
    out << "instance,base_seconds,config_seconds\n";
    for (size_t i = 0; i < r.instances.size(); ++i) {
        out << r.instances[i] << ',' << format_seconds(plotted(r.cells[i][0])) << ','
            << format_seconds(plotted(r.cells[i][config_idx])) << '\n';
    }
    return out.str();
}

std::string scatter_file_path(const std::string& base_path, const std::string& config_name) {
    std::string tag = config_name;
    std::replace(tag.begin(), tag.end(), '=', '-');
    fs::path p(base_path);
    fs::path named = p.parent_path() / (p.stem().string() + "-" + tag + p.extension().string());
    return named.string();
}

std::string format_bench_summary(const BenchResult& r) {
    const size_t n = r.configs.size();
    std::vector<uint64_t> solved_sat(n, 0), solved_unsat(n, 0);
    std::vector<double> time_sat(n, 0.0), time_unsat(n, 0.0);
    for (const auto& row : r.cells) {
        for (size_t c = 0; c < n; ++c) {
            if (row[c].status == Status::Sat) {
                ++solved_sat[c];
                time_sat[c] += row[c].seconds;
            } else if (row[c].status == Status::Unsat) {
                ++solved_unsat[c];
                time_unsat[c] += row[c].seconds;
            }
        }
    }

    std::vector<size_t> width(n);
    for (size_t c = 0; c < n; ++c) width[c] = std::max<size_t>(10, r.configs[c].name.size() + 2);

    std::ostringstream out;
    auto label = [&](const std::string& block, const std::string& metric) {
        out << std::left << std::setw(6) << block << std::setw(8) << metric << std::right;
    };
    label("", "");
    for (size_t c = 0; c < n; ++c) {
        out << std::setw(static_cast<int>(width[c])) << r.configs[c].name;
    }
    out << '\n';

    auto counts_row = [&](const std::string& block, auto value_of) {
        label(block, "Solved");
        for (size_t c = 0; c < n; ++c) out << std::setw(static_cast<int>(width[c])) << value_of(c);
        out << '\n';
    };
    auto time_row = [&](const std::string& block, auto value_of) {
        label(block, "Time(s)");
        out << std::fixed << std::setprecision(1);
        for (size_t c = 0; c < n; ++c) out << std::setw(static_cast<int>(width[c])) << value_of(c);
        out << '\n';
        out.unsetf(std::ios::fixed);
        out << std::setprecision(6);
    };

    counts_row("SAT", [&](size_t c) { return solved_sat[c]; });
    time_row("SAT", [&](size_t c) { return time_sat[c]; });
    counts_row("UNSAT", [&](size_t c) { return solved_unsat[c]; });
    time_row("UNSAT", [&](size_t c) { return time_unsat[c]; });
    counts_row("ALL", [&](size_t c) { return solved_sat[c] + solved_unsat[c]; });
    time_row("ALL", [&](size_t c) { return time_sat[c] + time_unsat[c]; });
    return out.str();
}

} // namespace coresat
