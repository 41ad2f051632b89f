#include "coresat/solver.hpp"

#include <algorithm>
#include <chrono>

namespace coresat {

namespace {

constexpr double kVarActivityLimit = 1e100;
constexpr double kClauseActivityLimit = 1e20;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

uint64_t luby(uint64_t i) {
    assert(i >= 1);
    // Walk down: if i is 2^k - 1 the value is 2^(k-1), otherwise recurse on
    // the position within the previous block.
    for (;;) {
        uint64_t size = 1, pow = 1; // size = 2^k - 1, pow = 2^(k-1) for k >= 1
        while (size < i) {
            pow <<= 1;
            size = 2 * size + 1;
        }
        if (size == i) return pow;
        i -= (size - 1) / 2; // previous block has (size-1)/2 entries
    }
}

uint32_t Solver::compute_lbd(std::span<const Lit> lits) const {
    ++lbd_stamp_;
    uint32_t distinct = 0;
    for (Lit l : lits) {
        assert(value(l) != Value::Undef);
        auto lev = static_cast<size_t>(levels_[l.var_index()]);
        if (lbd_seen_[lev] != lbd_stamp_) {
            lbd_seen_[lev] = lbd_stamp_;
            ++distinct;
        }
    }
    return distinct;
}

void Solver::bump_var(uint32_t var_index) {
    activity_[var_index] += var_inc_;
    if (activity_[var_index] > kVarActivityLimit) rescale_var_activities();
    order_heap_.increased(var_index, activity_);
}

void Solver::rescale_var_activities() {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
}

void Solver::bump_and_decay(const std::vector<uint32_t>& vars_in_conflict) {
    for (uint32_t v : vars_in_conflict) bump_var(v);
    var_inc_ /= cfg_.var_decay;
}

void Solver::bump_clause_activity(ClauseRef cref) {
    Clause& c = clauses_[cref];
    c.activity += cla_inc_;
    if (c.activity > kClauseActivityLimit) {
        for (Clause& d : clauses_) d.activity *= 1e-20;
        cla_inc_ *= 1e-20;
    }
}

LearntClause Solver::analyze_conflict(ClauseRef conflict) {
    LearntClause out;
    int conflict_level = decision_level();
    if (conflict_level == 0) return out; // empty clause: level-0 conflict

    out.lits.push_back(Lit(0)); // slot for the asserting literal
    analyzed_vars_.clear();
    uint32_t path = 0;           // unresolved literals at the conflict level
    Lit pivot(0);
    bool have_pivot = false;
    size_t index = trail_.size();
    ClauseRef reason = conflict;

    for (;;) {
        assert(reason != kNoClause);
        Clause& c = clauses_[reason];
        if (c.learnt) bump_clause_activity(reason);
        for (Lit q : c.lits) {
            if (have_pivot && q == pivot) continue;
            uint32_t v = q.var_index();
            if (seen_[v] || levels_[v] == 0) continue;
            seen_[v] = 1;
            analyzed_vars_.push_back(v);
            if (levels_[v] >= conflict_level) {
                ++path;
            } else {
                out.lits.push_back(q);
            }
        }
        while (!seen_[trail_[--index].var_index()]) {}
        pivot = trail_[index];
        have_pivot = true;
        seen_[pivot.var_index()] = 0;
        reason = antecedents_[pivot.var_index()];
        if (--path == 0) break;
    }
    out.lits[0] = negate(pivot);

    if (out.lits.size() == 1) {
        out.assertion_level = 0;
    } else {
        // Second literal must sit at the assertion level so it gets watched.
        size_t max_i = 1;
        for (size_t i = 2; i < out.lits.size(); ++i) {
            if (levels_[out.lits[i].var_index()] > levels_[out.lits[max_i].var_index()]) max_i = i;
        }
        std::swap(out.lits[1], out.lits[max_i]);
        out.assertion_level = levels_[out.lits[1].var_index()];
    }
    out.lbd = compute_lbd(out.lits);

    bump_and_decay(analyzed_vars_);
    cla_inc_ /= cfg_.clause_decay;
    for (uint32_t v : analyzed_vars_) seen_[v] = 0;

    if (learnt_hook) learnt_hook(out.lits, out.lbd, out.assertion_level, conflict_level);
    return out;
}

Lit Solver::decide() {
    while (!order_heap_.empty()) {
        uint32_t v = order_heap_.pop_max(activity_);
        if (values_[v] != Value::Undef) continue; // stale heap entry
        Lit l = make_lit(v, !phases_[v]);
        ++stats_.decisions;
        assume_decision(l);
        return l;
    }
    assert(false && "decide() requires an unassigned variable");
    return Lit(0);
}

bool Solver::should_restart() const {
    return conflicts_since_restart_ >= cfg_.restart_base * luby(stats_.restarts + 1);
}

void Solver::restart() {
    backtrack(0);
    conflicts_since_restart_ = 0;
    ++stats_.restarts;
}

bool Solver::locked(ClauseRef cref) const {
    for (Lit l : clauses_[cref].lits) {
        if (value(l) == Value::True && antecedents_[l.var_index()] == cref) return true;
    }
    return false;
}

void Solver::reduce_clause_db() {
    std::vector<ClauseRef> cands;
    for (ClauseRef i = 0; i < clauses_.size(); ++i) {
        const Clause& c = clauses_[i];
        if (c.learnt && !c.deleted && !is_core_clause(c, cfg_.core_lbd_threshold)) {
            cands.push_back(i);
        }
    }
    std::sort(cands.begin(), cands.end(), [&](ClauseRef a, ClauseRef b) {
        if (clauses_[a].activity != clauses_[b].activity) {
            return clauses_[a].activity < clauses_[b].activity;
        }
        return a < b;
    });
    size_t limit = cands.size() / 2;
    for (size_t k = 0; k < limit; ++k) {
        ClauseRef cref = cands[k];
        if (locked(cref)) continue;
        clauses_[cref].deleted = true; // watch entries drop lazily during scans
        proof_.log_delete(clauses_[cref].lits);
    }
}

ClauseRef Solver::add_learnt_clause(std::vector<Lit> lits, uint32_t lbd) {
    ClauseRef cref = add_clause(std::move(lits), true, lbd);
    bump_clause_activity(cref);
    return cref;
}

bool Solver::conflict_budget_exhausted() const {
    return cfg_.max_conflicts && stats_.conflicts >= *cfg_.max_conflicts;
}

Result Solver::solve() {
    auto start = Clock::now();
    Result res;
    auto finish = [&](Status s) {
        res.status = s;
        stats_.cpu_time = seconds_since(start);
        return res;
    };

    if (!ok_) {
        proof_.log_add({});
        return finish(Status::Unsat);
    }

    for (;;) {
        ClauseRef conflict = select_propagator(stats_, cfg_) == PropEngine::CoreFirst
                                 ? propagate_core_first()
                                 : propagate_standard();
        if (conflict != kNoClause) {
            ++stats_.conflicts;
            ++conflicts_since_restart_;
            if (decision_level() == 0) {
                proof_.log_add({});
                return finish(Status::Unsat);
            }
            LearntClause learnt = analyze_conflict(conflict);
            proof_.log_add(learnt.lits);
            ++stats_.learnt_total;
            if (learnt.lbd <= cfg_.core_lbd_threshold) ++stats_.learnt_core;
            backtrack(learnt.assertion_level);
            if (learnt.lits.size() == 1) {
                enqueue_assignment(learnt.lits[0], 0, kNoClause);
            } else {
                ClauseRef cref = add_learnt_clause(std::move(learnt.lits), learnt.lbd);
                enqueue_assignment(clauses_[cref][0], decision_level(), cref);
            }
            if (conflict_budget_exhausted()) return finish(Status::Unknown);
            if (cfg_.max_seconds && stats_.conflicts % 256 == 0 &&
                seconds_since(start) >= *cfg_.max_seconds) {
                return finish(Status::Unknown);
            }
        } else {
            if (trail_.size() == static_cast<size_t>(num_vars())) {
                res.model.resize(static_cast<size_t>(num_vars()));
                for (int v = 0; v < num_vars(); ++v) {
                    res.model[static_cast<size_t>(v)] =
                        values_[static_cast<size_t>(v)] == Value::True;
                }
                return finish(Status::Sat);
            }
            if (should_restart()) restart();
            if (stats_.conflicts >= next_reduce_) {
                reduce_clause_db();
                reduce_interval_ += cfg_.reduce_increment;
                next_reduce_ += reduce_interval_;
            }
            decide();
            if (cfg_.max_seconds && stats_.decisions % 1024 == 0 &&
                seconds_since(start) >= *cfg_.max_seconds) {
                return finish(Status::Unknown);
            }
        }
    }
}

} // namespace coresat
