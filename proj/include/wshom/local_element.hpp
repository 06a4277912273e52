#pragma once

#include <string>

#include "wshom/polynomial.hpp"

namespace wshom {

// pi-adic valuation: a non-negative integer, or infinite for the zero
// element. Ordered so that infinite compares greater than every finite
// value.
struct Valuation {
    bool infinite = false;
    unsigned value = 0;

    static Valuation inf() { return Valuation{true, 0}; }
    static Valuation of(unsigned v) { return Valuation{false, v}; }

    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
    bool operator<=(const Valuation& o) const { return *this == o || *this < o; }

    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

// Element of the local ring F[pi]_(pi): fractions num/den of polynomials
// whose denominator does not vanish at 0. This is an exact model of the
// ring of formal power series actually needed by the homology engine:
// every series that arises is the expansion of such a fraction.
//
// Canonical form: gcd(num, den) = 1 and den(0) = 1 (zero is 0/1). Equal
// values therefore have equal representations and operator== is semantic
// equality.
class LocalElement {
public:
    explicit LocalElement(Field f) : num_(Poly::zero(f)), den_(Poly::constant(f, 1)) {}

    static LocalElement zero(Field f) { return LocalElement(f); }
    static LocalElement one(Field f) { return from_poly(Poly::constant(f, 1)); }
    static LocalElement from_poly(Poly p);
    // num/den; errc::domain_error when den(0) = 0 after cancellation.
    static LocalElement from_fraction(Poly num, Poly den);
    static LocalElement pi_power(Field f, unsigned k) { return from_poly(Poly::pi_power(f, k)); }
    // c * pi^k for a field scalar c
    static LocalElement monomial(Field f, FieldElem c, unsigned k) {
        return from_poly(Poly::monomial(f, std::move(c), k));
    }

    const Field& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_unit() const { return !is_zero() && valuation().value == 0; }

    // ord_pi; infinite for zero. Denominators are units, so this is just
    // the order of the numerator.
    Valuation valuation() const;

    // Image in the residue field R/(pi), i.e. the constant term num(0).
    FieldElem residue() const;

    // True when the value is c * pi^k; exposes (c, k) for callers that
    // need the normal form of such elements.
    bool is_monomial() const;
    unsigned monomial_degree() const;
    FieldElem monomial_coeff() const;

    LocalElement operator-() const;
    LocalElement& operator+=(const LocalElement& o);
    LocalElement& operator-=(const LocalElement& o);
    LocalElement& operator*=(const LocalElement& o);
    friend LocalElement operator+(LocalElement a, const LocalElement& b) { return a += b; }
    friend LocalElement operator-(LocalElement a, const LocalElement& b) { return a -= b; }
    friend LocalElement operator*(LocalElement a, const LocalElement& b) { return a *= b; }

    // Multiplicative inverse. errc::zero_input on zero, errc::not_a_unit
    // when the valuation is positive (the inverse would leave the ring).
    LocalElement inverse() const;

    // a / b for b | a; errc::not_divisible when val(a) < val(b), i.e. the
    // quotient is not in the ring.
    static LocalElement divide_exact(const LocalElement& a, const LocalElement& b);

    bool operator==(const LocalElement& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const LocalElement& o) const { return !(*this == o); }

    // Renders with integer coefficients, e.g. "pi^3 + 2*pi^4" or
    // "(1 + pi)/(1 - pi)"; parse() accepts the same grammar (plus
    // arbitrary +,-,*,/ expressions over integers and pi).
    std::string to_string() const;
    static LocalElement parse(Field f, const std::string& text);

private:
    LocalElement(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    Poly num_, den_;
};

} // namespace wshom
