#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wshom/field.hpp"

namespace wshom {

// Dense univariate polynomial in pi over the coefficient field.
// Coefficients are stored by exponent with no trailing zeros, so equal
// polynomials have identical representations.
class Poly {
public:
    explicit Poly(Field f) : f_(f) {}
    Poly(Field f, std::vector<FieldElem> coeffs);

    static Poly zero(Field f) { return Poly(f); }
    static Poly constant(Field f, long c) { return monomial(f, FieldElem(f, c), 0); }
    static Poly constant(Field f, FieldElem c) { return monomial(f, std::move(c), 0); }
    static Poly monomial(Field f, FieldElem c, unsigned deg);
    static Poly pi_power(Field f, unsigned deg) { return monomial(f, FieldElem(f, 1), deg); }

    const Field& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero

    // Smallest exponent with a nonzero coefficient; nullopt for zero.
    std::optional<unsigned> order() const;

    FieldElem coeff(unsigned deg) const;
    FieldElem at_zero() const { return coeff(0); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const FieldElem& c) const;
    Poly shifted(unsigned k) const; // multiply by pi^k

    // Euclidean division by a nonzero divisor: *this = q * d + r with
    // deg r < deg d. Exact over the field, so always defined.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    // Monic greatest common divisor (gcd(0, 0) = 0).
    static Poly gcd(Poly a, Poly b);

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Term list like "1 + 2*pi - pi^3", ascending exponents. Zero is "0".
    std::string to_string() const;

private:
    void prune();

    Field f_;
    std::vector<FieldElem> c_;
};

} // namespace wshom
