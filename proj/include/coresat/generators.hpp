#pragma once

#include <cstdint>

#include "coresat/formula.hpp"

namespace coresat {

// Deterministic instance generators for tests and benchmark input. Every
// generated clause draws distinct variables, so clauses are normalized by
// construction (no duplicate literals, no tautologies).

// Fixed-clause-length random k-SAT: num_clauses clauses of k distinct
// variables each with independent random polarities.
Formula random_ksat(uint64_t seed, int num_vars, int num_clauses, int k = 3);

// Random formula with clause lengths drawn uniformly from
// [min_len, min(max_len, num_vars)].
Formula random_mixed(uint64_t seed, int num_vars, int num_clauses, int min_len, int max_len);

// Pigeonhole principle PHP(pigeons, holes): each pigeon sits in some hole,
// no two pigeons share a hole. Unsatisfiable iff pigeons > holes.
// Variable (i, j) "pigeon i in hole j" has index i * holes + j.
Formula pigeonhole(int pigeons, int holes);

} // namespace coresat
