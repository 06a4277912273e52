#include <doctest.h>

#include <random>

#include "support/test_support.hpp"
#include "wshom/error.hpp"
#include "wshom/local_element.hpp"

using namespace wshom;
using testsupport::series_prefix;

namespace {

Poly random_poly(Field f, std::mt19937_64& rng, int max_deg, bool unit_constant) {
    Poly p = Poly::zero(f);
    const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (int i = 0; i <= deg; ++i) {
        long c = static_cast<long>(rng() % 7) - 3;
        if (c == 0) continue;
        p += Poly::monomial(f, FieldElem(f, c), static_cast<unsigned>(i));
    }
    if (unit_constant && p.at_zero().is_zero()) p += Poly::constant(f, 1);
    return p;
}

LocalElement random_element(Field f, std::mt19937_64& rng) {
    return LocalElement::from_fraction(random_poly(f, rng, 5, false),
                                       random_poly(f, rng, 4, true));
}

} // namespace

TEST_CASE("polynomial division and gcd") {
    const Field q = Field::rationals();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Poly a = random_poly(q, rng, 6, false);
        Poly d = random_poly(q, rng, 3, false);
        if (d.is_zero()) d = Poly::pi_power(q, 1);
        const auto [quot, rem] = a.divmod(d);
        CHECK(quot * d + rem == a);
        CHECK(rem.degree() < d.degree());

        const Poly g = Poly::gcd(a, d);
        if (!g.is_zero()) {
            CHECK(a.divmod(g).second.is_zero());
            CHECK(d.divmod(g).second.is_zero());
        }
    }
    CHECK(Poly::gcd(Poly::zero(q), Poly::zero(q)).is_zero());
}

TEST_CASE("ring arithmetic matches the power-series expansion") {
    std::mt19937_64 rng(23);
    for (Field f : {Field::rationals(), Field::prime(5)}) {
        for (int i = 0; i < 150; ++i) {
            const LocalElement a = random_element(f, rng);
            const LocalElement b = random_element(f, rng);

            const auto sa = series_prefix(a, 12);
            const auto sb = series_prefix(b, 12);

            const auto sum = series_prefix(a + b, 12);
            const auto dif = series_prefix(a - b, 12);
            std::vector<FieldElem> prod;
            for (int k = 0; k < 12; ++k) {
                FieldElem acc(f);
                for (int j = 0; j <= k; ++j)
                    acc += sa[static_cast<size_t>(j)] * sb[static_cast<size_t>(k - j)];
                prod.push_back(acc);
            }
            for (int k = 0; k < 12; ++k) {
                CHECK(sum[static_cast<size_t>(k)] ==
                      sa[static_cast<size_t>(k)] + sb[static_cast<size_t>(k)]);
                CHECK(dif[static_cast<size_t>(k)] ==
                      sa[static_cast<size_t>(k)] - sb[static_cast<size_t>(k)]);
            }
            CHECK(series_prefix(a * b, 12) == prod);

            if (a.is_unit()) CHECK(a * a.inverse() == LocalElement::one(f));
            if (!b.is_zero()) CHECK(LocalElement::divide_exact(a * b, b) == a);
        }
    }
}

TEST_CASE("valuation and residue read off the series") {
    std::mt19937_64 rng(37);
    const Field q = Field::rationals();
    for (int i = 0; i < 200; ++i) {
        const LocalElement a = random_element(q, rng);
        const auto s = series_prefix(a, 16);
        int first = -1;
        for (int k = 0; k < 16; ++k)
            if (!s[static_cast<size_t>(k)].is_zero()) {
                first = k;
                break;
            }
        if (a.is_zero()) {
            CHECK(a.valuation() == Valuation::inf());
            CHECK(first == -1);
        } else {
            // random numerators have degree <= 5, so the order is visible
            REQUIRE(first >= 0);
            CHECK(a.valuation() == Valuation::of(static_cast<unsigned>(first)));
        }
        CHECK(a.residue() == s[0]);
    }
    CHECK(Valuation::of(3) < Valuation::inf());
    CHECK_FALSE(Valuation::inf() < Valuation::of(1000));
    CHECK(Valuation::inf() == Valuation::inf());
}

TEST_CASE("monomial classification") {
    const Field q = Field::rationals();
    const LocalElement m = LocalElement::monomial(q, FieldElem(q, -3), 4);
    REQUIRE(m.is_monomial());
    CHECK(m.monomial_degree() == 4);
    CHECK(m.monomial_coeff() == FieldElem(q, -3));

    const LocalElement mixed = LocalElement::pi_power(q, 1) + LocalElement::one(q);
    CHECK_FALSE(mixed.is_monomial());
    CHECK_THROWS_AS(mixed.monomial_degree(), error);

    // canonical fractions can still be monomial in value
    const LocalElement folded = LocalElement::from_fraction(
        Poly::pi_power(q, 2) + Poly::pi_power(q, 3), Poly::constant(q, 1) + Poly::pi_power(q, 1));
    CHECK(folded.is_monomial());
    CHECK(folded.monomial_degree() == 2);
}

TEST_CASE("units, inverses and exact division police their domains") {
    const Field q = Field::rationals();
    const LocalElement pi = LocalElement::pi_power(q, 1);
    CHECK_FALSE(pi.is_unit());
    CHECK_THROWS_AS(pi.inverse(), error);
    CHECK_THROWS_AS(LocalElement::zero(q).inverse(), error);
    CHECK_THROWS_AS(LocalElement::divide_exact(pi, pi * pi), error);
    CHECK(LocalElement::divide_exact(LocalElement::zero(q), pi).is_zero());

    try {
        pi.inverse();
    } catch (const error& e) {
        CHECK(e.code() == errc::not_a_unit);
    }
    try {
        LocalElement::divide_exact(pi, pi * pi);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_divisible);
    }
}

TEST_CASE("prime-field arithmetic wraps") {
    const Field f2 = Field::prime(2);
    CHECK((FieldElem(f2, 1) + FieldElem(f2, 1)).is_zero());
    const LocalElement p = LocalElement::pi_power(f2, 1);
    CHECK((p + p).is_zero());

    const Field f5 = Field::prime(5);
    CHECK(FieldElem(f5, 2).inverse() == FieldElem(f5, 3));
    CHECK(FieldElem(f5, 7) == FieldElem(f5, 2));

    CHECK_THROWS_AS(Field::prime(6), error);
}

TEST_CASE("rendering round-trips through the parser") {
    std::mt19937_64 rng(53);
    for (Field f : {Field::rationals(), Field::prime(7)}) {
        for (int i = 0; i < 120; ++i) {
            const LocalElement a = random_element(f, rng);
            CHECK(LocalElement::parse(f, a.to_string()) == a);
        }
    }
    const Field q = Field::rationals();
    CHECK(LocalElement::parse(q, "pi^4") == LocalElement::pi_power(q, 4));
    CHECK(LocalElement::parse(q, "-2*pi") ==
          LocalElement::monomial(q, FieldElem(q, -2), 1));
    CHECK(LocalElement::parse(q, "(1 + pi)/(1 - pi)") ==
          LocalElement::from_fraction(Poly::constant(q, 1) + Poly::pi_power(q, 1),
                                      Poly::constant(q, 1) - Poly::pi_power(q, 1)));
    CHECK(LocalElement::parse(q, "1/2").residue() == FieldElem(q, mpq_class(1, 2)));

    CHECK_THROWS_AS(LocalElement::parse(q, "1/pi"), error);   // leaves the ring
    CHECK_THROWS_AS(LocalElement::parse(q, "pi +"), error);
    CHECK_THROWS_AS(LocalElement::parse(q, ""), error);
}

TEST_CASE("field mismatch is refused") {
    const Field q = Field::rationals();
    const Field f2 = Field::prime(2);
    CHECK_THROWS_AS(FieldElem(q, 1) + FieldElem(f2, 1), error);
}
