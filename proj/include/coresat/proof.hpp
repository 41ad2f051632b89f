#pragma once

#include <ostream>
#include <span>
#include <stdexcept>

#include "coresat/literal.hpp"

namespace coresat {

// Plain-text DRAT sink. Every clause the solver learns is logged before it
// can serve as an antecedent; deletions are logged when they happen. The
// sink is not owned and must outlive the solver.
class ProofLog {
public:
    ProofLog() = default;

    void set_sink(std::ostream* sink) { sink_ = sink; }
    [[nodiscard]] bool enabled() const { return sink_ != nullptr; }

    void log_add(std::span<const Lit> lits) { write_line(lits, false); }
    void log_delete(std::span<const Lit> lits) { write_line(lits, true); }

private:
    void write_line(std::span<const Lit> lits, bool del) {
        if (!sink_) return;
        if (del) *sink_ << "d ";
        for (Lit l : lits) *sink_ << decode_literal(l) << ' ';
        *sink_ << "0\n";
        if (!*sink_) throw std::runtime_error("proof sink write failed");
    }

    std::ostream* sink_ = nullptr;
};

} // namespace coresat
