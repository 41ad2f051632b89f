#pragma once

#include <cstdint>
#include <vector>

#include "coresat/literal.hpp"

namespace coresat {

// A CNF formula after input normalization: clauses hold no duplicate
// literals and no tautologies; an input clause that normalized to zero
// literals is recorded in contains_empty instead of being stored.
struct Formula {
    int num_vars = 0;
    std::vector<std::vector<Lit>> clauses;
    bool contains_empty = false;

    bool operator==(const Formula&) const = default;
};

// Removes duplicate literals (keeping first occurrence order) and reports
// whether the clause is a tautology. Quadratic, but clause arity is small.
[[nodiscard]] inline bool normalize_clause(std::vector<Lit>& lits) {
    size_t kept = 0;
    for (size_t i = 0; i < lits.size(); ++i) {
        bool dup = false;
        for (size_t j = 0; j < kept; ++j) {
            if (lits[j] == lits[i]) { dup = true; break; }
            if (lits[j] == negate(lits[i])) return true; // tautology
        }
        if (!dup) lits[kept++] = lits[i];
    }
    lits.resize(kept);
    return false;
}

} // namespace coresat
