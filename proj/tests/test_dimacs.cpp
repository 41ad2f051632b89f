#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "coresat/dimacs.hpp"
#include "coresat/generators.hpp"
#include "testutil.hpp"

using namespace coresat;
using testutil::clause;
using testutil::formula;

namespace {

Formula parse_str(const std::string& text, std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    return parse_dimacs(in, warnings);
}

std::string write_str(const Formula& f) {
    std::ostringstream out;
    write_dimacs(f, out);
    return out.str();
}

} // namespace

TEST_CASE("parses a plain document") {
    Formula f = parse_str("p cnf 2 2\n1 -2 0\n2 0");
    CHECK(f == formula(2, {{1, -2}, {2}}));
    CHECK_FALSE(f.contains_empty);
}

TEST_CASE("drops tautologies") {
    Formula f = parse_str("p cnf 1 1\n1 -1 0");
    CHECK(f == formula(1, {}));
}

TEST_CASE("deduplicates literals") {
    Formula f = parse_str("p cnf 3 1\n1 1 -2 0");
    CHECK(f == formula(3, {{1, -2}}));
}

TEST_CASE("records the empty clause") {
    Formula f = parse_str("p cnf 2 2\n0\n1 0");
    CHECK(f.contains_empty);
    CHECK(f.clauses == std::vector<std::vector<Lit>>{clause({1})});
}

TEST_CASE("skips comments and blank lines, clauses may span lines") {
    Formula f = parse_str("c a comment\n\np cnf 3 1\nc mid comment\n1 2\n3 0\n");
    CHECK(f == formula(3, {{1, 2, 3}}));
}

TEST_CASE("clause count mismatch is a warning, not an error") {
    std::vector<std::string> warnings;
    Formula f = parse_str("p cnf 2 5\n1 0\n", &warnings);
    CHECK(f == formula(2, {{1}}));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("5") != std::string::npos);
    CHECK(warnings[0].find("1") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
    SUBCASE("missing header") {
        CHECK_THROWS_AS(parse_str("1 2 0\n"), ParseError);
    }
    SUBCASE("duplicate header") {
        try {
            parse_str("p cnf 1 1\np cnf 1 1\n1 0\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("malformed header") {
        CHECK_THROWS_AS(parse_str("p cnf x 1\n1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_str("p dnf 1 1\n1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_str("p cnf 1 1 junk\n1 0\n"), ParseError);
    }
    SUBCASE("non-integer token") {
        try {
            parse_str("p cnf 2 1\n1 x 0\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("variable out of range") {
        try {
            parse_str("p cnf 2 1\n1 -3 0\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("unterminated clause at end of file") {
        CHECK_THROWS_AS(parse_str("p cnf 2 1\n1 2\n"), ParseError);
    }
    SUBCASE("empty document") {
        CHECK_THROWS_AS(parse_str(""), ParseError);
    }
}

TEST_CASE("write format") {
    CHECK(write_str(formula(2, {{1, -2}, {2}})) == "p cnf 2 2\n1 -2 0\n2 0\n");
    CHECK(write_str(formula(0, {})) == "p cnf 0 0\n");
}

TEST_CASE("write records the empty clause as a bare terminator") {
    Formula f = formula(1, {{1}});
    f.contains_empty = true;
    std::string text = write_str(f);
    CHECK(text == "p cnf 1 2\n1 0\n0\n");
    CHECK(parse_str(text) == f);
}

TEST_CASE("round-trip over 1000 random formulas") {
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        int num_vars = 1 + static_cast<int>(seed % 30);
        int num_clauses = static_cast<int>(seed % 60);
        Formula f = random_mixed(seed, num_vars, num_clauses, 1, 6);
        Formula g = parse_str(write_str(f));
        REQUIRE(g == f);
    }
}
