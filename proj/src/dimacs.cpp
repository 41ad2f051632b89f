#include "coresat/dimacs.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace coresat {

namespace {

bool is_integer_token(const std::string& tok) {
    size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

} // namespace

Formula parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
    Formula f;
    bool header_seen = false;
    long header_clauses = 0;
    long raw_clauses = 0;
    std::vector<Lit> current;
    bool in_clause = false;
    int line_no = 0;
    int clause_start_line = 0;

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank line
        if (tok == "c" || tok[0] == 'c') continue;

        if (tok == "p") {
            if (header_seen) throw ParseError(line_no, "duplicate 'p' header");
            std::string fmt;
            long nv = -1, nc = -1;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0)
                throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            std::string rest;
            if (ls >> rest) throw ParseError(line_no, "trailing tokens after header");
            f.num_vars = static_cast<int>(nv);
            header_clauses = nc;
            header_seen = true;
            continue;
        }

        if (!header_seen) throw ParseError(line_no, "clause data before 'p cnf' header");

        // Clause tokens; the first one was already consumed above.
        do {
            if (!is_integer_token(tok)) throw ParseError(line_no, "non-integer token '" + tok + "'");
            long v = std::stol(tok);
            if (v == 0) {
                ++raw_clauses;
                in_clause = false;
                bool taut = normalize_clause(current);
                if (!taut) {
                    if (current.empty())
                        f.contains_empty = true;
                    else
                        f.clauses.push_back(current);
                }
                current.clear();
            } else {
                if (!in_clause) { in_clause = true; clause_start_line = line_no; }
                long var = v > 0 ? v : -v;
                if (var > f.num_vars)
                    throw ParseError(line_no, "literal " + tok + " exceeds declared variable count " +
                                                  std::to_string(f.num_vars));
                current.push_back(encode_literal(v));
            }
        } while (ls >> tok);
    }

    if (!header_seen) throw ParseError(line_no, "missing 'p cnf' header");
    if (in_clause)
        throw ParseError(clause_start_line, "clause not terminated by 0 at end of file");
    if (warnings && raw_clauses != header_clauses)
        warnings->push_back("header declares " + std::to_string(header_clauses) + " clauses but " +
                            std::to_string(raw_clauses) + " were found");
    return f;
}

void write_dimacs(const Formula& f, std::ostream& out) {
    size_t count = f.clauses.size() + (f.contains_empty ? 1 : 0);
    out << "p cnf " << f.num_vars << ' ' << count << '\n';
    for (const auto& clause : f.clauses) {
        for (Lit l : clause) out << decode_literal(l) << ' ';
        out << "0\n";
    }
    if (f.contains_empty) out << "0\n";
}

Formula parse_dimacs_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_dimacs(in, warnings);
}

} // namespace coresat
