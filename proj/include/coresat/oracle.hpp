#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "coresat/formula.hpp"
#include "coresat/literal.hpp"

namespace coresat {

// Reference implementations used to cross-check the solver. Nothing here
// shares code with the search: propagation below is counter-based over
// occurrence lists, not watched literals.

// Exhaustive search over all 2^n assignments, in increasing order of the
// assignment mask with variable i bound to bit i-1. Returns the first
// satisfying assignment (indexed by variable index), or nullopt.
// Throws std::invalid_argument when the formula has more than 25 variables.
std::optional<std::vector<bool>> brute_force_solve(const Formula& f);

// True iff the complete assignment satisfies every clause. The model must
// cover all variables; throws std::invalid_argument otherwise.
bool check_model(const Formula& f, const std::vector<bool>& model);

// One proof line: an added clause, or a deletion when is_delete is set.
struct DratLine {
    bool is_delete = false;
    std::vector<Lit> lits;
    bool operator==(const DratLine&) const = default;
};

// Parses a text proof, one clause per line, each terminated by 0, deletions
// prefixed with "d". Blank lines and lines starting with 'c' are skipped.
// Throws std::runtime_error on malformed input.
std::vector<DratLine> parse_drat(std::istream& in);

// Forward check of an unsatisfiability proof: every added clause must be
// derivable by reverse unit propagation from the formula plus the additions
// so far (minus matched deletions), and the proof must add the empty clause.
// Deletions of clauses not present are ignored.
bool check_rup_proof(const Formula& f, const std::vector<DratLine>& proof);
bool check_rup_proof(const Formula& f, std::istream& proof);

} // namespace coresat
