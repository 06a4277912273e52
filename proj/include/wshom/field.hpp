#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "wshom/error.hpp"

namespace wshom {

enum class field_kind { rationals, prime };

// Coefficient field descriptor. The engine is generic over the residue
// field at runtime: either Q (exact rationals) or F_p for a prime p.
// Elements carry their field so that mixing operands from different
// fields is caught immediately instead of producing garbage.
struct Field {
    field_kind kind = field_kind::rationals;
    std::uint32_t p = 0; // modulus, meaningful only for field_kind::prime

    static Field rationals() { return Field{field_kind::rationals, 0}; }
    static Field prime(std::uint32_t p);

    // "Q" or "Fp:<p>", the same spelling the document format and the
    // --field flag use.
    std::string to_string() const;
    static Field parse(const std::string& text);

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }
};

// Element of the coefficient field. Values are stored as exact rationals;
// for F_p the value is the canonical residue 0..p-1 with denominator 1.
class FieldElem {
public:
    FieldElem() = default; // zero over Q; usable only as a placeholder
    explicit FieldElem(Field f) : f_(f) {}
    FieldElem(Field f, long v) : f_(f), v_(v) { normalize(); }
    FieldElem(Field f, mpq_class v) : f_(f), v_(std::move(v)) { normalize(); }

    const Field& field() const { return f_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }

    // Multiplicative inverse; errc::zero_input on zero.
    FieldElem inverse() const;
    FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Plain value rendering: "2", "-1/3" over Q, the residue over F_p.
    std::string to_string() const;

private:
    void normalize();
    void check_same_field(const FieldElem& o) const;

    Field f_ = Field::rationals();
    mpq_class v_ = 0;
};

} // namespace wshom
