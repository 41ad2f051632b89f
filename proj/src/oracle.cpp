#include "coresat/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace coresat {

namespace {

bool clause_satisfied(const std::vector<Lit>& clause, const std::vector<bool>& model) {
    for (Lit l : clause) {
        if (model[l.var_index()] != l.negative()) return true;
    }
    return false;
}

// Unit propagation over occurrence lists with per-clause false-literal
// counters. Assignments made while loading clauses persist; assumptions made
// during a clause check are rolled back afterwards.
class RupChecker {
public:
    explicit RupChecker(const Formula& f) {
        ensure_var(static_cast<uint32_t>(f.num_vars));
        if (f.contains_empty) refuted_ = true;
        for (const auto& c : f.clauses) insert_clause(c);
    }

    [[nodiscard]] bool refuted() const { return refuted_; }

    // Reverse unit propagation: assuming the negation of every literal must
    // run into a falsified clause. On success the clause joins the database.
    bool add_and_check(std::vector<Lit> lits) {
        dedup(lits);
        for (Lit l : lits) ensure_var(l.var_index() + 1);
        if (refuted_) { // everything is derivable from a refuted database
            insert_clause(lits);
            return true;
        }
        size_t mark = trail_.size();
        bool conflict = false;
        for (Lit l : lits) {
            Value v = value(l);
            if (v == Value::True) { // negation contradicts a forced literal
                conflict = true;
                break;
            }
            if (v == Value::Undef && !assign(negate(l))) {
                conflict = true;
                break;
            }
        }
        if (!conflict) conflict = propagate(mark);
        undo_to(mark);
        if (!conflict) return false;
        insert_clause(lits);
        return true;
    }

    void remove(std::vector<Lit> lits) {
        dedup(lits);
        auto it = index_.find(key_of(lits));
        if (it == index_.end() || it->second.empty()) return; // not present: ignore
        size_t id = it->second.back();
        it->second.pop_back();
        clauses_[id].active = false;
    }

private:
    struct Cls {
        std::vector<Lit> lits;
        bool active = true;
        size_t false_count = 0;
    };

    static void dedup(std::vector<Lit>& lits) {
        std::sort(lits.begin(), lits.end(), [](Lit a, Lit b) { return a.code() < b.code(); });
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    }

    static std::vector<uint32_t> key_of(const std::vector<Lit>& lits) {
        std::vector<uint32_t> key;
        key.reserve(lits.size());
        for (Lit l : lits) key.push_back(l.code());
        return key; // lits arrive sorted from dedup
    }

    void ensure_var(uint32_t num_vars) {
        if (values_.size() < num_vars) values_.resize(num_vars, Value::Undef);
        if (occ_.size() < 2 * static_cast<size_t>(num_vars)) occ_.resize(2 * num_vars);
    }

    [[nodiscard]] Value value(Lit l) const { return values_[l.var_index()] ^ l.negative(); }

    // Makes l true, updating the false counters of clauses containing its
    // negation. Returns false when some active clause becomes fully false.
    bool assign(Lit l) {
        assert(value(l) == Value::Undef);
        values_[l.var_index()] = l.negative() ? Value::False : Value::True;
        trail_.push_back(l);
        bool ok = true;
        for (size_t id : occ_[negate(l).code()]) {
            Cls& c = clauses_[id];
            ++c.false_count;
            if (c.active && c.false_count == c.lits.size()) ok = false;
        }
        return ok;
    }

    // Processes trail entries from qhead, enqueueing literals of clauses
    // that became unit. Returns true when a conflict is reached.
    bool propagate(size_t qhead) {
        for (; qhead < trail_.size(); ++qhead) {
            Lit p = trail_[qhead];
            for (size_t id : occ_[negate(p).code()]) {
                const Cls& c = clauses_[id];
                if (!c.active || c.false_count + 1 != c.lits.size()) continue;
                Lit unit = find_non_false(c);
                if (value(unit) == Value::True) continue; // clause satisfied
                if (!assign(unit)) return true;
            }
        }
        return false;
    }

    [[nodiscard]] Lit find_non_false(const Cls& c) const {
        for (Lit l : c.lits) {
            if (value(l) != Value::False) return l;
        }
        assert(false && "no non-false literal in a unit clause");
        return c.lits[0];
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            Lit l = trail_.back();
            trail_.pop_back();
            values_[l.var_index()] = Value::Undef;
            for (size_t id : occ_[negate(l).code()]) --clauses_[id].false_count;
        }
    }

    // Appends a clause (assumed deduplicated) and draws its immediate
    // consequences: a fully false clause refutes the database, a unit one
    // is propagated. These assignments are permanent.
    void insert_clause(const std::vector<Lit>& lits) {
        size_t id = clauses_.size();
        Cls c;
        c.lits = lits;
        for (Lit l : lits) {
            if (value(l) == Value::False) ++c.false_count;
        }
        clauses_.push_back(std::move(c));
        for (Lit l : lits) occ_[l.code()].push_back(id);
        index_[key_of(lits)].push_back(id);

        if (lits.empty() || clauses_[id].false_count == lits.size()) {
            refuted_ = true;
            return;
        }
        if (refuted_ || clauses_[id].false_count + 1 != lits.size()) return;
        Lit unit = find_non_false(clauses_[id]);
        if (value(unit) != Value::Undef) return; // already satisfied
        if (!assign(unit) || propagate(trail_.size() - 1)) refuted_ = true;
    }

    std::vector<Cls> clauses_;
    std::vector<std::vector<size_t>> occ_; // literal code -> ids of clauses containing it
    std::map<std::vector<uint32_t>, std::vector<size_t>> index_; // sorted codes -> active ids
    std::vector<Value> values_;
    std::vector<Lit> trail_;
    bool refuted_ = false;
};

} // namespace

std::optional<std::vector<bool>> brute_force_solve(const Formula& f) {
    if (f.num_vars > 25) {
        throw std::invalid_argument("brute_force_solve: formula has too many variables");
    }
    if (f.contains_empty) return std::nullopt;
    auto n = static_cast<uint32_t>(f.num_vars);
    std::vector<bool> model(n);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        for (uint32_t v = 0; v < n; ++v) model[v] = (mask >> v) & 1;
        bool all = true;
        for (const auto& c : f.clauses) {
            if (!clause_satisfied(c, model)) {
                all = false;
                break;
            }
        }
        if (all) return model;
    }
    return std::nullopt;
}

bool check_model(const Formula& f, const std::vector<bool>& model) {
    if (model.size() != static_cast<size_t>(f.num_vars)) {
        throw std::invalid_argument("check_model: model size does not match variable count");
    }
    if (f.contains_empty) return false;
    for (const auto& c : f.clauses) {
        if (!clause_satisfied(c, model)) return false;
    }
    return true;
}

std::vector<DratLine> parse_drat(std::istream& in) {
    std::vector<DratLine> proof;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream toks(line);
        std::string tok;
        if (!(toks >> tok) || tok == "c") continue;
        DratLine out;
        if (tok == "d") {
            out.is_delete = true;
            if (!(toks >> tok)) {
                throw std::runtime_error("proof line " + std::to_string(line_no) +
                                         ": deletion without literals");
            }
        }
        bool terminated = false;
        for (;;) {
            int64_t v = 0;
            try {
                size_t pos = 0;
                v = std::stoll(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw std::runtime_error("proof line " + std::to_string(line_no) +
                                         ": bad token '" + tok + "'");
            }
            if (v == 0) {
                terminated = true;
                if (toks >> tok) {
                    throw std::runtime_error("proof line " + std::to_string(line_no) +
                                             ": tokens after terminating 0");
                }
                break;
            }
            out.lits.push_back(encode_literal(v));
            if (!(toks >> tok)) break;
        }
        if (!terminated) {
            throw std::runtime_error("proof line " + std::to_string(line_no) +
                                     ": missing terminating 0");
        }
        proof.push_back(std::move(out));
    }
    return proof;
}

bool check_rup_proof(const Formula& f, const std::vector<DratLine>& proof) {
    RupChecker checker(f);
    bool empty_added = false;
    for (const DratLine& line : proof) {
        if (line.is_delete) {
            checker.remove(line.lits);
            continue;
        }
        if (!checker.add_and_check(line.lits)) return false;
        if (line.lits.empty()) empty_added = true;
    }
    return empty_added;
}

bool check_rup_proof(const Formula& f, std::istream& proof) {
    return check_rup_proof(f, parse_drat(proof));
}

} // namespace coresat
