#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "coresat/clause.hpp"
#include "coresat/config.hpp"
#include "coresat/detail/var_heap.hpp"
#include "coresat/formula.hpp"
#include "coresat/literal.hpp"
#include "coresat/proof.hpp"

namespace coresat {

// Watcher entry for a binary clause; carries the other literal so binary
// propagation never touches clause storage.
struct BinWatch {
    Lit other;
    ClauseRef cref = kNoClause;
    bool operator==(const BinWatch&) const = default;
};

// Which propagation engine the search loop should call next.
enum class PropEngine : uint8_t { Standard, CoreFirst };

[[nodiscard]] inline PropEngine select_propagator(const SearchStats& stats, const SolverConfig& cfg) {
    switch (cfg.mode) {
        case Mode::Bcp: return PropEngine::Standard;
        case Mode::Cfup: return PropEngine::CoreFirst;
        default: return stats.conflicts > cfg.theta ? PropEngine::Standard : PropEngine::CoreFirst;
    }
}

// Luby sequence, 1-indexed: 1,1,2,1,1,2,4,1,...
[[nodiscard]] uint64_t luby(uint64_t i);

// Result of first-UIP conflict analysis. lits[0] is the asserting literal;
// lits[1], when present, sits at the assertion level.
struct LearntClause {
    std::vector<Lit> lits;
    uint32_t lbd = 0;
    int assertion_level = 0;

    [[nodiscard]] bool empty() const { return lits.empty(); }
};

// A CDCL solver whose unit propagation runs in two interchangeable engines:
// the standard two-watched-literal scan, and a core-first variant that keeps
// core clauses (learnt, low LBD) at the front of each non-binary watch list
// by swapping retained entries in place during the scan. Binary watch lists
// are never reordered. The search loop picks the engine per iteration from
// the configured mode and the global conflict count.
//
// Instances are plain values: copying produces an independent snapshot of
// the whole search state (test hooks are copied as-is, so clear them on
// clones if they capture the original).
class Solver {
public:
    explicit Solver(int num_vars, SolverConfig cfg = {});
    Solver(const Formula& f, SolverConfig cfg = {});

    // ------------------------------------------------------------------
    // Clause database
    // ------------------------------------------------------------------

    // Adds a clause over existing variables. Empty clauses make the solver
    // permanently unsatisfiable; unit clauses are enqueued as level-0 facts
    // (only legal before any decision). Returns kNoClause for both.
    ClauseRef add_clause(std::vector<Lit> lits, bool learnt = false, uint32_t lbd = 0);

    // Registers the first two literals of a clause with >= 2 literals in
    // the appropriate watch lists, appending at the end (no core-priority
    // placement at attach time).
    void attach_clause(ClauseRef cref);

    // ------------------------------------------------------------------
    // Assignment and trail
    // ------------------------------------------------------------------

    // Assigns a literal at the current decision level. Returns true if the
    // literal was unassigned or already true, false on contradiction.
    // `level` must equal decision_level(); it documents call sites.
    bool enqueue_assignment(Lit l, int level, ClauseRef antecedent);

    // Opens a new decision level with l as its decision.
    void assume_decision(Lit l);

    // Pops all trail entries above target_level, saving phases, and resets
    // the propagation head to the trail end.
    void backtrack(int target_level);

    // ------------------------------------------------------------------
    // Propagation engines
    // ------------------------------------------------------------------

    // Standard BCP: processes trail literals from the propagation head,
    // scanning each literal's binary list then its non-binary list in
    // stored order. Retained clauses keep their relative order. Returns
    // the falsified clause on conflict, kNoClause at fixpoint.
    ClauseRef propagate_standard();

    // Same implication semantics as propagate_standard, but while scanning
    // a non-binary list the retained clauses are re-partitioned in place so
    // core clauses precede non-core ones: with [0..m] the core zone of the
    // retained prefix, a retained core clause is swapped with position m+1.
    // Clauses whose watch relocates leave the list and are exempt.
    ClauseRef propagate_core_first();

    // ------------------------------------------------------------------
    // Search
    // ------------------------------------------------------------------

    // Runs the CDCL loop until SAT (all variables assigned), UNSAT (empty
    // learnt clause / level-0 conflict), or an exhausted budget (Unknown).
    Result solve();

    // First-UIP analysis of a falsified clause. Returns the empty clause
    // when the conflict is at decision level 0. Bumps variable activities
    // of everything the resolution touched and decays the increment once.
    LearntClause analyze_conflict(ClauseRef conflict);

    // Number of distinct decision levels among the (all assigned) literals.
    uint32_t compute_lbd(std::span<const Lit> lits) const;

    // Picks the unassigned variable of maximum activity (ties by lowest
    // index), applies its saved phase (initially false), opens a new level
    // and enqueues the decision. Pre: at least one variable unassigned.
    Lit decide();

    void bump_and_decay(const std::vector<uint32_t>& vars_in_conflict);

    [[nodiscard]] bool should_restart() const;
    void restart();

    // Deletes the lowest-activity half of the non-core learnt clauses.
    // Core clauses (lbd <= threshold) and antecedents of current
    // assignments are never deleted. Deletions are logged to the proof.
    void reduce_clause_db();

    // ------------------------------------------------------------------
    // Inspection
    // ------------------------------------------------------------------

    [[nodiscard]] int num_vars() const { return static_cast<int>(values_.size()); }
    [[nodiscard]] bool ok() const { return ok_; }
    [[nodiscard]] Value value(Lit l) const { return values_[l.var_index()] ^ l.negative(); }
    [[nodiscard]] Value value_of_var(uint32_t var_index) const { return values_[var_index]; }
    [[nodiscard]] int level_of(uint32_t var_index) const { return levels_[var_index]; }
    [[nodiscard]] ClauseRef antecedent_of(uint32_t var_index) const { return antecedents_[var_index]; }
    [[nodiscard]] int decision_level() const { return static_cast<int>(level_starts_.size()); }
    [[nodiscard]] const std::vector<Lit>& trail() const { return trail_; }
    [[nodiscard]] size_t propagate_head() const { return head_; }
    [[nodiscard]] size_t level_start(int level) const {
        return level == 0 ? 0 : level_starts_[static_cast<size_t>(level) - 1];
    }
    [[nodiscard]] size_t num_clauses() const { return clauses_.size(); }
    [[nodiscard]] const Clause& clause(ClauseRef cref) const { return clauses_[cref]; }
    [[nodiscard]] bool is_core(ClauseRef cref) const {
        return is_core_clause(clauses_[cref], cfg_.core_lbd_threshold);
    }
    [[nodiscard]] double activity(uint32_t var_index) const { return activity_[var_index]; }

    // Manual database surgery for tools and tests; normal runs adjust
    // clause activities only through conflict analysis.
    void set_clause_activity(ClauseRef cref, double a) { clauses_[cref].activity = a; }

    // Watch lists are keyed by the trail literal that triggers the scan:
    // the list for p holds clauses in which negate(p) is a watched literal.
    [[nodiscard]] const std::vector<ClauseRef>& nonbinary_watches(Lit p) const {
        return nonbin_watches_[p.code()];
    }
    [[nodiscard]] const std::vector<BinWatch>& binary_watches(Lit p) const {
        return bin_watches_[p.code()];
    }

    [[nodiscard]] const SearchStats& stats() const { return stats_; }
    [[nodiscard]] const SolverConfig& config() const { return cfg_; }
    ProofLog& proof() { return proof_; }

    // Test hooks. cfup_scan_hook fires after each completed (conflict-free)
    // core-first non-binary scan with the scanned literal and the number of
    // retained entries. learnt_hook fires for every learnt clause with its
    // literals, lbd, assertion level, and the conflict's decision level.
    std::function<void(Lit, size_t)> cfup_scan_hook;
    std::function<void(const std::vector<Lit>&, uint32_t, int, int)> learnt_hook;

private:
    template <bool CoreFirst>
    ClauseRef propagate_impl();

    // Recomputes a learnt antecedent's lbd after it implied a literal,
    // keeping the smaller value. Core status is read from the stored lbd
    // at propagation time, so the core set can grow during the run.
    void refresh_antecedent_lbd(ClauseRef cref);

    ClauseRef add_learnt_clause(std::vector<Lit> lits, uint32_t lbd);
    void bump_var(uint32_t var_index);
    void rescale_var_activities();
    void bump_clause_activity(ClauseRef cref);
    [[nodiscard]] bool locked(ClauseRef cref) const;
    [[nodiscard]] bool conflict_budget_exhausted() const;

    SolverConfig cfg_;
    SearchStats stats_;
    ProofLog proof_;
    bool ok_ = true; // false once an empty clause or contradicting units exist

    std::vector<Clause> clauses_;

    // Per-variable state, indexed by variable index.
    std::vector<Value> values_;
    std::vector<int> levels_;
    std::vector<ClauseRef> antecedents_;
    std::vector<double> activity_;
    std::vector<uint8_t> phases_;
    std::vector<uint8_t> seen_; // analyze scratch

    std::vector<Lit> trail_;
    std::vector<size_t> level_starts_;
    size_t head_ = 0;

    std::vector<std::vector<ClauseRef>> nonbin_watches_; // keyed by literal code
    std::vector<std::vector<BinWatch>> bin_watches_;

    detail::VarHeap order_heap_;
    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;

    uint64_t conflicts_since_restart_ = 0;
    uint64_t next_reduce_ = 0;
    uint64_t reduce_interval_ = 0;

    // compute_lbd scratch: per-level stamps.
    mutable std::vector<uint64_t> lbd_seen_;
    mutable uint64_t lbd_stamp_ = 0;

    std::vector<uint32_t> analyzed_vars_; // analyze scratch
};

} // namespace coresat
