#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "coresat/formula.hpp"

namespace coresat {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

// Parses a DIMACS CNF document: 'c' comment lines, one 'p cnf V C' header,
// then clauses as signed integers terminated by 0 (clauses may span lines).
// Clauses are normalized on the way in; a clause-count mismatch against the
// header is reported through `warnings` (when given), not an error.
Formula parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);

// Emits a document that parse_dimacs maps back to a structurally equal
// Formula. The recorded empty clause, if any, is written as a bare "0" line.
void write_dimacs(const Formula& f, std::ostream& out);

Formula parse_dimacs_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

} // namespace coresat
