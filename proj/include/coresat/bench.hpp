#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coresat/config.hpp"

namespace coresat {

// One benchmark configuration: a display name plus the solver settings it
// stands for. "base" is pure standard propagation; "theta=X" is hybrid mode
// with the switch point at X conflicts (X may use scientific notation).
struct BenchConfig {
    std::string name;
    SolverConfig solver;
};

// Parses a comma-separated config list, e.g. "base,theta=1e6,theta=2e6".
// Throws std::invalid_argument on an unrecognized entry.
std::vector<BenchConfig> parse_bench_configs(const std::string& text);

struct BenchOptions {
    std::string dir;                // directory scanned for *.cnf files
    double timeout_seconds = 5.0;   // per instance and config
    std::string configs = "base,theta=1e6,theta=2e6,theta=3e6";
    std::string out_csv;            // per-run CSV path; empty = don't write
    std::string scatter_csv;        // scatter CSV base path; empty = don't write
    int jobs = 1;
    uint64_t seed = 0;
};

struct BenchCell {
    Status status = Status::Unknown;
    double seconds = 0.0;
    uint64_t conflicts = 0;
};

struct BenchResult {
    std::vector<BenchConfig> configs;
    std::vector<std::string> instances;        // sorted file names
    std::vector<std::vector<BenchCell>> cells; // cells[instance][config]
    std::string summary;                       // human-readable table
};

// Runs every instance under every config (up to `jobs` concurrently; each
// solver stays single-threaded) and writes the requested CSV files.
// Results are deterministic per instance and config apart from timing.
// Throws std::runtime_error when the directory or an instance is unreadable.
BenchResult run_bench(const BenchOptions& opt);

// CSV with header instance,config,status,seconds,conflicts; rows grouped by
// instance in sorted order, configs in the order given.
std::string results_csv(const BenchResult& r);

// Scatter data comparing config_idx against the first config (the
// baseline): header instance,base_seconds,config_seconds. Instances not
// solved within the timeout plot at the timeout value.
std::string scatter_csv(const BenchResult& r, size_t config_idx, double timeout_seconds);

// Scatter output goes to one file per non-baseline config; the config name
// is spliced into the base path before the extension, with '=' flattened to
// '-': ("scatter.csv", "theta=1e6") -> "scatter-theta-1e6.csv".
std::string scatter_file_path(const std::string& base_path, const std::string& config_name);

// Six-row summary (Solved and Time for SAT, UNSAT, ALL) with one column per
// config. Time sums the solved instances of the block only.
std::string format_bench_summary(const BenchResult& r);

} // namespace coresat
