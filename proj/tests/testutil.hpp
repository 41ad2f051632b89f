#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "coresat/formula.hpp"
#include "coresat/literal.hpp"
#include "coresat/solver.hpp"

namespace testutil {

// DIMACS-style literal shorthand: lit(3) is x3, lit(-3) its negation.
inline coresat::Lit lit(int v) {
    return coresat::encode_literal(v);
}

inline std::vector<coresat::Lit> clause(std::initializer_list<int> ints) {
    std::vector<coresat::Lit> c;
    c.reserve(ints.size());
    for (int v : ints) c.push_back(lit(v));
    return c;
}

inline coresat::Formula formula(int num_vars, std::initializer_list<std::initializer_list<int>> cls) {
    coresat::Formula f;
    f.num_vars = num_vars;
    for (const auto& c : cls) f.clauses.push_back(clause(c));
    return f;
}

// Snapshot of everything the two propagation engines are supposed to agree
// on under an empty core set.
struct PropagationState {
    std::vector<coresat::Lit> trail;
    size_t head;
    coresat::ClauseRef conflict;
    std::vector<std::vector<coresat::ClauseRef>> nonbin;
    std::vector<std::vector<coresat::BinWatch>> bin;
};

inline PropagationState capture(const coresat::Solver& s, coresat::ClauseRef conflict) {
    PropagationState st;
    st.trail = s.trail();
    st.head = s.propagate_head();
    st.conflict = conflict;
    for (int v = 0; v < s.num_vars(); ++v) {
        for (bool neg : {false, true}) {
            coresat::Lit l = coresat::make_lit(static_cast<uint32_t>(v), neg);
            st.nonbin.push_back(s.nonbinary_watches(l));
            st.bin.push_back(s.binary_watches(l));
        }
    }
    return st;
}

inline bool operator==(const PropagationState& a, const PropagationState& b) {
    return a.trail == b.trail && a.head == b.head && a.conflict == b.conflict &&
           a.nonbin == b.nonbin && a.bin == b.bin;
}

// Checks that the trail and the per-variable assignment tell the same story.
inline bool trail_consistent(const coresat::Solver& s) {
    size_t assigned = 0;
    for (int v = 0; v < s.num_vars(); ++v) {
        if (s.value_of_var(static_cast<uint32_t>(v)) != coresat::Value::Undef) ++assigned;
    }
    if (assigned != s.trail().size()) return false;
    for (size_t i = 0; i < s.trail().size(); ++i) {
        if (s.value(s.trail()[i]) != coresat::Value::True) return false;
    }
    return true;
}

// Drivers for fuzzing a solver from outside its solve loop.

inline void random_decision(coresat::Solver& s, std::mt19937_64& rng) {
    std::vector<uint32_t> unassigned;
    for (int v = 0; v < s.num_vars(); ++v) {
        if (s.value_of_var(static_cast<uint32_t>(v)) == coresat::Value::Undef) {
            unassigned.push_back(static_cast<uint32_t>(v));
        }
    }
    s.assume_decision(coresat::make_lit(unassigned[rng() % unassigned.size()], rng() % 2 == 1));
}

// Learns from a conflict and reinstalls via the public operations. Returns
// false when the conflict was at level 0 (search space exhausted).
inline bool learn_from(coresat::Solver& s, coresat::ClauseRef conflict) {
    if (s.decision_level() == 0) return false;
    coresat::LearntClause lc = s.analyze_conflict(conflict);
    if (lc.empty()) return false;
    s.backtrack(lc.assertion_level);
    if (lc.lits.size() == 1) {
        s.enqueue_assignment(lc.lits[0], 0, coresat::kNoClause);
    } else {
        coresat::ClauseRef cref = s.add_clause(lc.lits, true, lc.lbd);
        s.enqueue_assignment(lc.lits[0], s.decision_level(), cref);
    }
    return true;
}

// Propagates to a conflict-free fixpoint, learning along the way. Returns
// false when the search space is exhausted (conflict at level 0). Keeping
// the solver at a fixpoint before each decision mirrors the solve loop;
// analyze_conflict expects conflicts found at the current decision level.
inline bool settle(coresat::Solver& s, bool use_cfup) {
    for (;;) {
        coresat::ClauseRef cm = use_cfup ? s.propagate_core_first() : s.propagate_standard();
        if (cm == coresat::kNoClause) return true;
        if (!learn_from(s, cm)) return false;
    }
}

// True when, within the retained prefix of the scanned list, no core clause
// appears after a non-core one.
inline bool core_prefix_partitioned(const coresat::Solver& s, coresat::Lit p, size_t retained) {
    const auto& wl = s.nonbinary_watches(p);
    if (retained > wl.size()) return false;
    bool seen_non_core = false;
    for (size_t i = 0; i < retained; ++i) {
        if (s.is_core(wl[i])) {
            if (seen_non_core) return false;
        } else {
            seen_non_core = true;
        }
    }
    return true;
}

} // namespace testutil
