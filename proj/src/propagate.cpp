#include "coresat/solver.hpp"

#include <algorithm>

namespace coresat {

Solver::Solver(int num_vars, SolverConfig cfg) : cfg_(cfg) {
    assert(num_vars >= 0);
    auto n = static_cast<size_t>(num_vars);
    values_.assign(n, Value::Undef);
    levels_.assign(n, 0);
    antecedents_.assign(n, kNoClause);
    activity_.assign(n, 0.0);
    phases_.assign(n, 0);
    seen_.assign(n, 0);
    nonbin_watches_.assign(2 * n, {});
    bin_watches_.assign(2 * n, {});
    lbd_seen_.assign(n + 1, 0); // one slot per possible decision level
    order_heap_.grow(n);
    for (uint32_t v = 0; v < n; ++v) order_heap_.insert(v, activity_);
    next_reduce_ = cfg_.reduce_first;
    reduce_interval_ = cfg_.reduce_first;
    trail_.reserve(n);
}

Solver::Solver(const Formula& f, SolverConfig cfg) : Solver(f.num_vars, cfg) {
    if (f.contains_empty) ok_ = false;
    for (const auto& c : f.clauses) add_clause(c);
}

ClauseRef Solver::add_clause(std::vector<Lit> lits, bool learnt, uint32_t lbd) {
    if (lits.empty()) {
        ok_ = false;
        return kNoClause;
    }
    if (lits.size() == 1) {
        assert(decision_level() == 0);
        if (!enqueue_assignment(lits[0], 0, kNoClause)) ok_ = false;
        return kNoClause;
    }
    auto cref = static_cast<ClauseRef>(clauses_.size());
    clauses_.push_back(Clause{std::move(lits), learnt, false, lbd, 0.0});
    attach_clause(cref);
    return cref;
}

void Solver::attach_clause(ClauseRef cref) {
    const Clause& c = clauses_[cref];
    assert(c.size() >= 2);
    if (c.size() == 2) {
        bin_watches_[negate(c[0]).code()].push_back({c[1], cref});
        bin_watches_[negate(c[1]).code()].push_back({c[0], cref});
    } else {
        nonbin_watches_[negate(c[0]).code()].push_back(cref);
        nonbin_watches_[negate(c[1]).code()].push_back(cref);
    }
}

bool Solver::enqueue_assignment(Lit l, int level, ClauseRef antecedent) {
    assert(level == decision_level());
    (void)level;
    Value v = value(l);
    if (v != Value::Undef) return v == Value::True;
    uint32_t var = l.var_index();
    values_[var] = l.negative() ? Value::False : Value::True;
    levels_[var] = decision_level();
    antecedents_[var] = antecedent;
    trail_.push_back(l);
    return true;
}

void Solver::assume_decision(Lit l) {
    assert(value(l) == Value::Undef);
    level_starts_.push_back(trail_.size());
    enqueue_assignment(l, decision_level(), kNoClause);
}

void Solver::backtrack(int target_level) {
    if (decision_level() <= target_level) return;
    size_t keep = level_start(target_level + 1);
    for (size_t i = trail_.size(); i-- > keep;) {
        uint32_t var = trail_[i].var_index();
        phases_[var] = values_[var] == Value::True;
        values_[var] = Value::Undef;
        antecedents_[var] = kNoClause;
        levels_[var] = 0;
        if (!order_heap_.contains(var)) order_heap_.insert(var, activity_);
    }
    trail_.resize(keep);
    level_starts_.resize(static_cast<size_t>(target_level));
    head_ = trail_.size();
}

void Solver::refresh_antecedent_lbd(ClauseRef cref) {
    Clause& c = clauses_[cref];
    if (!c.learnt) return;
    uint32_t now = compute_lbd(c.lits);
    if (now < c.lbd) c.lbd = now;
}

// Both engines share this body; CoreFirst only adds the in-place partition
// of retained non-binary entries, so with an empty core set the two produce
// byte-identical state.
template <bool CoreFirst>
ClauseRef Solver::propagate_impl() {
    ClauseRef conflict = kNoClause;
    int level = decision_level();

    while (head_ < trail_.size() && conflict == kNoClause) {
        Lit p = trail_[head_++];
        ++stats_.propagations;

        // Binary clauses first; their lists are never reordered. Entries
        // for deleted clauses are dropped as the scan passes them.
        auto& wb = bin_watches_[p.code()];
        size_t i = 0, j = 0;
        while (i < wb.size()) {
            BinWatch w = wb[i++];
            if (clauses_[w.cref].deleted) continue;
            wb[j++] = w;
            if (conflict != kNoClause) continue; // just compact the rest
            Value v = value(w.other);
            if (v == Value::False) {
                conflict = w.cref;
            } else if (v == Value::Undef) {
                enqueue_assignment(w.other, level, w.cref);
                refresh_antecedent_lbd(w.cref);
            }
        }
        wb.resize(j);
        if (conflict != kNoClause) break;

        auto& wl = nonbin_watches_[p.code()];
        Lit false_lit = negate(p);
        i = j = 0;
        size_t core_end = 0; // retained entries [0, core_end) are core
        while (i < wl.size()) {
            ClauseRef cref = wl[i];
            Clause& c = clauses_[cref];
            if (c.deleted) {
                ++i;
                continue;
            }
            if (conflict != kNoClause) { // keep the rest untouched
                wl[j++] = wl[i++];
                continue;
            }
            if (c[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
            assert(c[1] == false_lit);
            Lit first = c[0];

            if (value(first) != Value::True) {
                // Look for a non-false replacement watch.
                bool relocated = false;
                for (size_t k = 2; k < c.size(); ++k) {
                    if (value(c[k]) != Value::False) {
                        std::swap(c.lits[1], c.lits[k]);
                        nonbin_watches_[negate(c[1]).code()].push_back(cref);
                        relocated = true;
                        break;
                    }
                }
                if (relocated) { // leaves this list; exempt from the partition
                    ++i;
                    continue;
                }
                if (value(first) == Value::False) {
                    conflict = cref;
                    wl[j++] = wl[i++]; // retained in place, no partition swap
                    continue;
                }
                enqueue_assignment(first, level, cref);
                refresh_antecedent_lbd(cref);
            }

            // Retain the clause (watch unchanged: satisfied, or unit here).
            wl[j] = cref;
            if constexpr (CoreFirst) {
                if (is_core_clause(c, cfg_.core_lbd_threshold)) {
                    std::swap(wl[j], wl[core_end]);
                    ++core_end;
                }
            }
            ++j;
            ++i;
        }
        wl.resize(j);
        if constexpr (CoreFirst) {
            if (conflict == kNoClause) {
                ++stats_.cfup_scans;
                if (cfup_scan_hook) cfup_scan_hook(p, j);
            }
        }
    }
    return conflict;
}

ClauseRef Solver::propagate_standard() {
    return propagate_impl<false>();
}

ClauseRef Solver::propagate_core_first() {
    return propagate_impl<true>();
}

} // namespace coresat
