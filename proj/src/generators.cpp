#include "coresat/generators.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace coresat {

namespace {

// Engine-stable uniform pick in [0, n); std::uniform_int_distribution is
// not pinned down by the standard, and generated instances feed golden
// expectations.
uint64_t pick(std::mt19937_64& rng, uint64_t n) {
    return rng() % n;
}

std::vector<Lit> random_clause(std::mt19937_64& rng, int num_vars, int len) {
    std::vector<uint32_t> vars;
    vars.reserve(static_cast<size_t>(len));
    while (vars.size() < static_cast<size_t>(len)) {
        auto v = static_cast<uint32_t>(pick(rng, static_cast<uint64_t>(num_vars)));
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    std::vector<Lit> clause;
    clause.reserve(vars.size());
    for (uint32_t v : vars) clause.push_back(make_lit(v, pick(rng, 2) == 1));
    return clause;
}

} // namespace

Formula random_ksat(uint64_t seed, int num_vars, int num_clauses, int k) {
    assert(k >= 1 && k <= num_vars);
    std::mt19937_64 rng(seed);
    Formula f;
    f.num_vars = num_vars;
    f.clauses.reserve(static_cast<size_t>(num_clauses));
    for (int i = 0; i < num_clauses; ++i) f.clauses.push_back(random_clause(rng, num_vars, k));
    return f;
}

Formula random_mixed(uint64_t seed, int num_vars, int num_clauses, int min_len, int max_len) {
    assert(min_len >= 1 && min_len <= max_len);
    max_len = std::min(max_len, num_vars);
    min_len = std::min(min_len, max_len);
    std::mt19937_64 rng(seed);
    Formula f;
    f.num_vars = num_vars;
    f.clauses.reserve(static_cast<size_t>(num_clauses));
    for (int i = 0; i < num_clauses; ++i) {
        int len = min_len + static_cast<int>(pick(rng, static_cast<uint64_t>(max_len - min_len + 1)));
        f.clauses.push_back(random_clause(rng, num_vars, len));
    }
    return f;
}

Formula pigeonhole(int pigeons, int holes) {
    assert(pigeons >= 1 && holes >= 1);
    Formula f;
    f.num_vars = pigeons * holes;
    auto var = [holes](int pigeon, int hole) {
        return static_cast<uint32_t>(pigeon * holes + hole);
    };
    for (int i = 0; i < pigeons; ++i) {
        std::vector<Lit> clause;
        clause.reserve(static_cast<size_t>(holes));
        for (int j = 0; j < holes; ++j) clause.push_back(make_lit(var(i, j), false));
        f.clauses.push_back(std::move(clause));
    }
    for (int j = 0; j < holes; ++j) {
        for (int a = 0; a < pigeons; ++a) {
            for (int b = a + 1; b < pigeons; ++b) {
                f.clauses.push_back({make_lit(var(a, j), true), make_lit(var(b, j), true)});
            }
        }
    }
    return f;
}

} // namespace coresat
