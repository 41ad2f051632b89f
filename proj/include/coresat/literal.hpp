#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace coresat {

// Variables are numbered 1..n externally (DIMACS) and indexed 0..n-1
// internally. A literal packs the variable index and its polarity into a
// dense code: variable v (1-based) maps to code 2*(v-1) for the positive
// literal and 2*(v-1)+1 for the negative one. Negation flips the low bit.
class Lit {
public:
    Lit() = default;
    constexpr explicit Lit(uint32_t code) : code_(code) {}

    [[nodiscard]] constexpr uint32_t code() const { return code_; }
    [[nodiscard]] constexpr uint32_t var_index() const { return code_ >> 1; }
    [[nodiscard]] constexpr bool negative() const { return code_ & 1; }

    constexpr auto operator<=>(const Lit&) const = default;

private:
    uint32_t code_ = 0;
};

[[nodiscard]] constexpr Lit negate(Lit l) { return Lit(l.code() ^ 1u); }

[[nodiscard]] constexpr Lit make_lit(uint32_t var_index, bool negative) {
    return Lit((var_index << 1) | static_cast<uint32_t>(negative));
}

// Signed DIMACS integer -> internal code. Zero is the clause terminator in
// DIMACS and never a literal.
inline Lit encode_literal(int64_t dimacs_lit) {
    if (dimacs_lit == 0) throw std::invalid_argument("literal 0 is not encodable");
    uint32_t v = static_cast<uint32_t>(dimacs_lit > 0 ? dimacs_lit : -dimacs_lit);
    return make_lit(v - 1, dimacs_lit < 0);
}

[[nodiscard]] constexpr int64_t decode_literal(Lit l) {
    int64_t v = static_cast<int64_t>(l.var_index()) + 1;
    return l.negative() ? -v : v;
}

inline std::ostream& operator<<(std::ostream& os, Lit l) { return os << decode_literal(l); }

// Truth value of a variable or literal. The encoding lets a literal's value
// be derived from its variable's by xoring with the polarity bit.
enum class Value : uint8_t { True = 0, False = 1, Undef = 2 };

[[nodiscard]] constexpr Value operator^(Value v, bool flip) {
    return v == Value::Undef ? v : static_cast<Value>(static_cast<uint8_t>(v) ^ static_cast<uint8_t>(flip));
}

} // namespace coresat
