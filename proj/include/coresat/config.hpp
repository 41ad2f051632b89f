#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coresat {

enum class Mode : uint8_t { Bcp, Cfup, Hybrid };

enum class Status : uint8_t { Sat, Unsat, Unknown };

[[nodiscard]] inline const char* to_string(Status s) {
    switch (s) {
        case Status::Sat: return "SAT";
        case Status::Unsat: return "UNSAT";
        default: return "UNKNOWN";
    }
}

[[nodiscard]] inline const char* to_string(Mode m) {
    switch (m) {
        case Mode::Bcp: return "bcp";
        case Mode::Cfup: return "cfup";
        default: return "hybrid";
    }
}

struct SolverConfig {
    Mode mode = Mode::Hybrid;
    // Conflict threshold for the hybrid switch: core-first propagation runs
    // while the global conflict count is <= theta, standard propagation after.
    uint64_t theta = 2'000'000;
    // Learnt clauses with lbd <= this are core (inclusive bound).
    uint32_t core_lbd_threshold = 7;

    // Luby restarts, in conflicts.
    uint64_t restart_base = 64;

    // Database reduction schedule: first reduction after `reduce_first`
    // conflicts, each later interval longer by `reduce_increment`.
    uint64_t reduce_first = 2000;
    uint64_t reduce_increment = 300;

    double var_decay = 0.95;
    double clause_decay = 0.999;

    std::optional<uint64_t> max_conflicts;  // exhausted budget -> Unknown
    std::optional<double> max_seconds;      // wall-clock budget -> Unknown
    uint64_t rng_seed = 0;                  // reserved for randomized heuristics
};

struct SearchStats {
    uint64_t conflicts = 0;
    uint64_t decisions = 0;
    uint64_t propagations = 0; // trail literals processed by the engines
    uint64_t restarts = 0;
    uint64_t learnt_total = 0;
    uint64_t learnt_core = 0;  // learnt with lbd <= core threshold at learning time
    uint64_t cfup_scans = 0;   // completed core-first non-binary list scans
    double cpu_time = 0.0;     // wall seconds of the last solve call
};

struct Result {
    Status status = Status::Unknown;
    std::vector<bool> model; // per-variable values, meaningful only when Sat
};

} // namespace coresat
