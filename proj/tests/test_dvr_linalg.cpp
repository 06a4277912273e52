#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "support/test_support.hpp"
#include "wshom/chain_maps.hpp"
#include "wshom/dvr_linalg.hpp"
#include "wshom/error.hpp"
#include "wshom/oracle.hpp"

using namespace wshom;
using testsupport::random_monomial_matrix;

namespace {

// Columns of reduced with all valuations, for the echelon checks below.
bool distinct_pivot_rows(const ReductionResult& red) {
    std::vector<int> rows;
    for (const auto& p : red.pivots) rows.push_back(p.row);
    std::sort(rows.begin(), rows.end());
    return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

} // namespace

TEST_CASE("column reduction invariants on random monomial matrices") {
    std::mt19937_64 rng(101);
    for (Field f : {Field::rationals(), Field::prime(2)}) {
        for (int trial = 0; trial < 60; ++trial) {
            const int rows = 1 + static_cast<int>(rng() % 8);
            const int cols = 1 + static_cast<int>(rng() % 8);
            const SparseMatrix m = random_monomial_matrix(f, rows, cols, rng);
            const ReductionResult red = reduce_columns(m);

            // the transform reproduces the reduction and is unimodular;
            // the Smith-form witness is kept to the small transforms, whose
            // fraction entries it can chew through quickly
            CHECK(m * red.transform == red.reduced);
            if (cols <= 5) {
                const SNFResult tsnf = smith_normal_form(red.transform);
                CHECK(tsnf.rank() == cols);
                for (unsigned e : tsnf.exponents) CHECK(e == 0);
            }

            CHECK(distinct_pivot_rows(red));
            CHECK(static_cast<int>(red.pivots.size() + red.zero_columns.size()) == cols);
            for (int zc : red.zero_columns) CHECK(red.reduced.column(zc).empty());
            for (size_t i = 0; i + 1 < red.pivots.size(); ++i)
                CHECK(red.pivots[i].valuation <= red.pivots[i + 1].valuation);
            for (const auto& p : red.pivots) {
                const LocalElement v = red.reduced.entry(p.row, p.col);
                REQUIRE(v.is_monomial());
                CHECK(v.monomial_degree() == p.valuation);
                CHECK(v.monomial_coeff() == FieldElem(f, 1)); // unit-normalized
                // the pivot is minimal in its column
                for (const auto& [r, x] : red.reduced.column(p.col))
                    CHECK(Valuation::of(p.valuation) <= x.valuation());
            }

            // dense and sparse paths agree entry for entry
            const ReductionResult dense = detail::reduce_columns_dense(m);
            const ReductionResult sparse = detail::reduce_columns_sparse(m);
            CHECK(dense.reduced == sparse.reduced);
            CHECK(dense.transform == sparse.transform);
        }
    }
}

TEST_CASE("pivot valuations are the invariant factors") {
    std::mt19937_64 rng(211);
    const Field q = Field::rationals();
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 5);
        const int cols = 1 + static_cast<int>(rng() % 5);
        const SparseMatrix m = random_monomial_matrix(q, rows, cols, rng);
        const SNFResult snf = smith_normal_form(m);

        // U * M * V really is the advertised diagonal
        const SparseMatrix diag = snf.left * m * snf.right;
        for (int r = 0; r < diag.rows(); ++r)
            for (int c = 0; c < diag.cols(); ++c) {
                const LocalElement e = diag.entry(r, c);
                if (r == c && r < snf.rank())
                    CHECK(e == LocalElement::pi_power(q, snf.exponents[static_cast<size_t>(r)]));
                else
                    CHECK(e.is_zero());
            }

        // independent minor-valuation count agrees
        const auto expected = minor_valuation_invariants(m);
        REQUIRE(expected.size() == snf.exponents.size());
        for (size_t i = 0; i < expected.size(); ++i)
            CHECK(expected[i] == snf.exponents[i]);
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("known elementary divisors") {
    const Field q = Field::rationals();
    SparseMatrix m(q, 2, 2);
    m.set(0, 0, LocalElement::pi_power(q, 1));
    m.set(1, 1, LocalElement::pi_power(q, 4));
    const SNFResult snf = smith_normal_form(m);
    CHECK(snf.exponents == std::vector<unsigned>{1, 4});

    // a unit anywhere forces the first factor down to pi^0
    m.set(0, 1, LocalElement::one(q));
    CHECK(smith_normal_form(m).exponents == std::vector<unsigned>{0, 5});
}

TEST_CASE("kernel bases really span the kernel") {
    std::mt19937_64 rng(307);
    const Field q = Field::rationals();
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 6);
        const int cols = 1 + static_cast<int>(rng() % 6);
        const SparseMatrix m = random_monomial_matrix(q, rows, cols, rng);
        const auto basis = kernel_basis(m);
        CHECK(static_cast<int>(basis.size()) == cols - smith_normal_form(m).rank());
        for (const auto& v : basis) {
            CHECK_FALSE(v.empty());
            CHECK(m.apply(v).empty());
            // primitive: some coefficient is a unit
            bool unit = false;
            for (const auto& [r, x] : v) unit = unit || x.is_unit();
            CHECK(unit);
        }
    }
}

TEST_CASE("membership solving distinguishes its three outcomes") {
    const Field q = Field::rationals();
    std::mt19937_64 rng(401);

    // solved: b built from a known x must be reproduced up to kernel
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 6);
        const int cols = 1 + static_cast<int>(rng() % 6);
        const SparseMatrix m = random_monomial_matrix(q, rows, cols, rng);
        SparseVec x;
        for (int c = 0; c < cols; ++c)
            if (rng() % 2)
                x.emplace(c, LocalElement::monomial(q, FieldElem(q, 1 + static_cast<long>(rng() % 4)),
                                                    static_cast<unsigned>(rng() % 4)));
        const SparseVec b = m.apply(x);
        const MembershipResult res = solve_membership(m, b);
        REQUIRE(res.status == membership::solved);
        CHECK(testsupport::vec_minus(q, m.apply(res.x), b).empty());
    }

    // not_in_ring: pi*x = 1 has no solution with non-negative valuation
    SparseMatrix pi_m(q, 1, 1);
    pi_m.set(0, 0, LocalElement::pi_power(q, 1));
    SparseVec one_v;
    one_v.emplace(0, LocalElement::one(q));
    CHECK(solve_membership(pi_m, one_v).status == membership::not_in_ring);
    CHECK(solve_membership(pi_m, one_v).blocked_row == 0);

    // inconsistent: a target outside the column span entirely
    SparseMatrix tall(q, 2, 1);
    tall.set(0, 0, LocalElement::one(q));
    SparseVec off;
    off.emplace(1, LocalElement::one(q));
    CHECK(solve_membership(tall, off).status == membership::inconsistent);

    // the factored solver answers repeated queries consistently
    const SparseMatrix m = random_monomial_matrix(q, 5, 4, rng);
    const ColumnSolver solver(m);
    for (int trial = 0; trial < 20; ++trial) {
        SparseVec x;
        for (int c = 0; c < 4; ++c)
            if (rng() % 2) x.emplace(c, LocalElement::pi_power(q, static_cast<unsigned>(rng() % 3)));
        const SparseVec b = m.apply(x);
        CHECK(solver.solve(b).status == membership::solved);
    }
}

TEST_CASE("column priority permutes tie-breaks but not invariants") {
    const Field q = Field::rationals();
    std::mt19937_64 rng(503);
    for (int trial = 0; trial < 30; ++trial) {
        const int cols = 2 + static_cast<int>(rng() % 5);
        const SparseMatrix m = random_monomial_matrix(q, 4, cols, rng);
        const SNFResult base = smith_normal_form(m);

        std::vector<int> priority(static_cast<size_t>(cols));
        std::iota(priority.begin(), priority.end(), 0);
        std::shuffle(priority.begin(), priority.end(), rng);
        const ReductionResult red = reduce_columns(m, &priority);
        CHECK(m * red.transform == red.reduced);
        std::vector<unsigned> vals;
        for (const auto& p : red.pivots) vals.push_back(p.valuation);
        CHECK(vals.size() == base.exponents.size());
        CHECK(std::equal(vals.begin(), vals.end(), base.exponents.begin()));
    }
}

TEST_CASE("integer Smith form on pinned matrices") {
    IntMatrix m(2, 2);
    m.a = {{2, 0}, {0, 3}};
    const IntSNFResult snf = integer_snf(m);
    REQUIRE(snf.factors.size() == 2);
    CHECK(snf.factors[0] == 1);
    CHECK(snf.factors[1] == 6);
    CHECK(snf.left * m * snf.right ==
          [] {
              IntMatrix d(2, 2);
              d.a = {{1, 0}, {0, 6}};
              return d;
          }());

    IntMatrix z(3, 2); // zero matrix has empty factor list
    CHECK(integer_snf(z).factors.empty());
}

TEST_CASE("integer Smith form of the projective plane boundary") {
    const WeightedComplex rp2 = testsupport::load_fixture("projective_plane.json");
    // classical d2 over Z: one invariant factor is 2, the torsion of RP^2
    SparseMatrix d2 = weighted_boundary(rp2.constant_weight(0), 2);
    IntMatrix zi(d2.rows(), d2.cols());
    for (int c = 0; c < d2.cols(); ++c)
        for (const auto& [r, v] : d2.column(c)) {
            REQUIRE(v.is_monomial());
            REQUIRE(v.monomial_degree() == 0);
            zi.a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                mpz_class(v.monomial_coeff().value().get_num());
        }
    const IntSNFResult snf = integer_snf(zi);
    REQUIRE(snf.rank() == 10);
    int twos = 0;
    for (const auto& d : snf.factors) {
        CHECK((d == 1 || d == 2));
        if (d == 2) ++twos;
    }
    CHECK(twos == 1);
}

TEST_CASE("two unlike integer eliminations agree on random matrices") {
    std::mt19937_64 rng(613);
    for (int trial = 0; trial < 80; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 6);
        const int cols = 1 + static_cast<int>(rng() % 6);
        IntMatrix m(rows, cols);
        for (auto& row : m.a)
            for (auto& e : row)
                if (rng() % 2) e = static_cast<long>(rng() % 19) - 9;
        const IntSNFResult a = integer_snf(m);
        const std::vector<mpz_class> b = bezout_invariant_factors(m);
        REQUIRE(a.factors.size() == b.size());
        for (size_t i = 0; i < b.size(); ++i) CHECK(a.factors[i] == b[i]);
        for (size_t i = 0; i + 1 < a.factors.size(); ++i)
            CHECK(a.factors[i + 1] % a.factors[i] == 0);
    }
}
