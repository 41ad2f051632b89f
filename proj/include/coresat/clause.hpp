#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "coresat/literal.hpp"

namespace coresat {

// Index of a clause in the solver's clause database.
using ClauseRef = uint32_t;
inline constexpr ClauseRef kNoClause = std::numeric_limits<ClauseRef>::max();

struct Clause {
    std::vector<Lit> lits;
    bool learnt = false;
    bool deleted = false;
    uint32_t lbd = 0; // 0 = unset; always set for learnt clauses before attach
    double activity = 0.0;

    [[nodiscard]] size_t size() const { return lits.size(); }
    Lit& operator[](size_t i) { return lits[i]; }
    Lit operator[](size_t i) const { return lits[i]; }
};

// A clause is core when it is learnt and its literal block distance is at
// most the configured threshold. Original clauses are never core.
[[nodiscard]] inline bool is_core_clause(const Clause& c, uint32_t lbd_threshold) {
    return c.learnt && c.lbd != 0 && c.lbd <= lbd_threshold;
}

} // namespace coresat
