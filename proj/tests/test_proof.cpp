#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "coresat/generators.hpp"
#include "coresat/oracle.hpp"
#include "coresat/proof.hpp"
#include "coresat/solver.hpp"
#include "testutil.hpp"

using namespace coresat;
using testutil::clause;
using testutil::formula;
using testutil::lit;

namespace {

// Solves under a proof sink and hands the captured text to the checker.
bool proof_checks(const Formula& f, const SolverConfig& cfg) {
    std::ostringstream sink;
    Solver s(f, cfg);
    s.proof().set_sink(&sink);
    Result r = s.solve();
    REQUIRE(r.status == Status::Unsat);
    std::istringstream in(sink.str());
    return check_rup_proof(f, parse_drat(in));
}

} // namespace

TEST_CASE("log_add writes one terminated line per clause") {
    std::ostringstream out;
    ProofLog log;
    log.set_sink(&out);
    CHECK(log.enabled());

    log.log_add(clause({-1}));
    log.log_add(clause({2, -3}));
    log.log_add({});
    CHECK(out.str() == "-1 0\n2 -3 0\n0\n");
}

TEST_CASE("log_delete prefixes the line with d") {
    std::ostringstream out;
    ProofLog log;
    log.set_sink(&out);
    log.log_delete(clause({1, 2}));
    log.log_add(clause({-2}));
    CHECK(out.str() == "d 1 2 0\n-2 0\n");
}

TEST_CASE("a log without a sink swallows everything") {
    ProofLog log;
    CHECK_FALSE(log.enabled());
    CHECK_NOTHROW(log.log_add(clause({1})));
    CHECK_NOTHROW(log.log_delete(clause({1})));
}

TEST_CASE("a failed sink raises instead of silently truncating the proof") {
    std::ostringstream out;
    out.setstate(std::ios::badbit);
    ProofLog log;
    log.set_sink(&out);
    CHECK_THROWS_AS(log.log_add(clause({1})), std::runtime_error);
}

TEST_CASE("solver proofs end with the empty clause") {
    Formula f = formula(2, {{1, 2}, {-1}, {-2}});
    std::ostringstream sink;
    Solver s(f);
    s.proof().set_sink(&sink);
    REQUIRE(s.solve().status == Status::Unsat);

    std::istringstream in(sink.str());
    auto lines = parse_drat(in);
    REQUIRE(!lines.empty());
    CHECK_FALSE(lines.back().is_delete);
    CHECK(lines.back().lits.empty());
}

TEST_CASE("an input empty clause is logged as an immediate refutation") {
    Formula f;
    f.num_vars = 1;
    f.contains_empty = true;
    std::ostringstream sink;
    Solver s(f);
    s.proof().set_sink(&sink);
    REQUIRE(s.solve().status == Status::Unsat);
    CHECK(sink.str() == "0\n");
}

TEST_CASE("emitted proofs pass the independent checker") {
    SUBCASE("tiny chain") {
        SolverConfig cfg;
        CHECK(proof_checks(formula(2, {{1, 2}, {-1}, {-2}}), cfg));
    }
    SUBCASE("pigeonhole, one mode per engine path") {
        for (Mode m : {Mode::Bcp, Mode::Cfup, Mode::Hybrid}) {
            CAPTURE(static_cast<int>(m));
            SolverConfig cfg;
            cfg.mode = m;
            CHECK(proof_checks(pigeonhole(4, 3), cfg));
        }
    }
    SUBCASE("pigeonhole with aggressive reduction: deletions in the proof") {
        SolverConfig cfg;
        cfg.mode = Mode::Cfup;
        cfg.core_lbd_threshold = 1; // almost nothing is protected
        cfg.reduce_first = 10;
        cfg.reduce_increment = 5;

        Formula f = pigeonhole(5, 4);
        std::ostringstream sink;
        Solver s(f, cfg);
        s.proof().set_sink(&sink);
        REQUIRE(s.solve().status == Status::Unsat);

        std::istringstream in(sink.str());
        auto lines = parse_drat(in);
        size_t deletions = 0;
        for (const auto& l : lines) deletions += l.is_delete;
        CHECK(deletions > 0);
        CHECK(check_rup_proof(f, lines));
    }
    SUBCASE("random unsatisfiable instances") {
        int found = 0;
        for (uint64_t seed = 0; found < 25; ++seed) {
            REQUIRE(seed < 500);
            Formula f = random_ksat(seed, 10, 55, 3);
            if (brute_force_solve(f).has_value()) continue;
            ++found;
            SolverConfig cfg;
            cfg.mode = seed % 2 == 0 ? Mode::Cfup : Mode::Bcp;
            CHECK(proof_checks(f, cfg));
        }
    }
}

TEST_CASE("solver proof text round-trips through the parser") {
    Formula f = pigeonhole(4, 3);
    std::ostringstream sink;
    Solver s(f);
    s.proof().set_sink(&sink);
    REQUIRE(s.solve().status == Status::Unsat);

    std::istringstream in(sink.str());
    auto lines = parse_drat(in);
    // Re-render and re-parse: identical line sequence.
    std::ostringstream rendered;
    ProofLog relog;
    relog.set_sink(&rendered);
    for (const auto& l : lines) {
        if (l.is_delete) {
            relog.log_delete(l.lits);
        } else {
            relog.log_add(l.lits);
        }
    }
    CHECK(rendered.str() == sink.str());
    std::istringstream in2(rendered.str());
    CHECK(parse_drat(in2) == lines);
}
