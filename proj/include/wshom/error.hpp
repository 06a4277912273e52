#pragma once

#include <stdexcept>
#include <string>

namespace wshom {

enum class errc {
    field_mismatch,   // operands belong to different coefficient fields
    zero_input,       // inversion of the zero element
    not_a_unit,       // inversion of an element with positive valuation
    not_divisible,    // exact division would leave the ring
    parse_error,      // malformed element / document / structure text
    validation_error, // complex document violates closure or monotonicity
    domain_error,     // operation precondition violated (dimension, weights, field kind)
    internal_error,   // invariant broken inside the engine; always a bug
};

// Single exception type for the whole library. The code is kept separate
// from the message so callers (and the C shim) can branch without string
// matching.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace wshom
