#include <doctest.h>

#include "support/test_support.hpp"
#include "wshom/error.hpp"
#include "wshom/homology.hpp"
#include "wshom/oracle.hpp"

using namespace wshom;

TEST_CASE("minor valuations on hand matrices") {
    const Field q = Field::rationals();
    SparseMatrix d(q, 2, 2);
    d.set(0, 0, LocalElement::pi_power(q, 1));
    d.set(1, 1, LocalElement::pi_power(q, 4));
    CHECK(minor_valuation_invariants(d) == std::vector<unsigned>{1, 4});

    // the 1x1 determinantal divisor sees the global minimum even when the
    // matrix is far from diagonal
    SparseMatrix m(q, 2, 3);
    m.set(0, 0, LocalElement::pi_power(q, 3));
    m.set(1, 0, LocalElement::pi_power(q, 2));
    m.set(0, 2, LocalElement::one(q) + LocalElement::pi_power(q, 1));
    m.set(1, 2, LocalElement::pi_power(q, 5));
    const auto inv = minor_valuation_invariants(m);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 0);
    // 2x2 minors: cols {0,2} give val 2+0 vs 3+5 -> 2; so e2 = 2 - 0
    CHECK(inv[1] == 2);

    CHECK(minor_valuation_invariants(SparseMatrix(q, 4, 0)).empty());
    CHECK(minor_valuation_invariants(SparseMatrix(q, 3, 3)).empty());

    SparseMatrix big(q, 12, 12);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) big.set(i, j, LocalElement::pi_power(q, 1));
    CHECK_THROWS_AS(minor_valuation_invariants(big), error);
}

TEST_CASE("integer homology of the classical fixtures") {
    const WeightedComplex rp2 = testsupport::load_fixture("projective_plane.json");
    const IntegerHomology h1 = integer_homology(rp2, 1);
    CHECK(h1.rank == 0);
    REQUIRE(h1.torsion.size() == 1);
    CHECK(h1.torsion[0] == 2);
    CHECK(integer_homology(rp2, 0).rank == 1);
    CHECK(integer_homology(rp2, 2).rank == 0);
    CHECK(integer_homology(rp2, 2).torsion.empty());

    const WeightedComplex sphere = testsupport::load_fixture("sphere.json");
    CHECK(integer_homology(sphere, 2).rank == 1);
    CHECK(integer_homology(sphere, 1).rank == 0);

    const WeightedComplex torus = testsupport::load_fixture("torus.json");
    CHECK(integer_homology(torus, 1).rank == 2);
    CHECK(integer_homology(torus, 1).torsion.empty());
    CHECK(integer_homology(torus, 2).rank == 1);

    // weights play no role in the integral computation
    const WeightedComplex fig = testsupport::load_fixture("collab_network.json");
    CHECK(integer_homology(fig, 1).rank == 1);
    CHECK(integer_homology(fig, 1).torsion.empty());

    // out-of-range degrees are simply zero here
    CHECK(integer_homology(fig, 7).rank == 0);
    CHECK(integer_homology(fig, -1).rank == 0);
}

TEST_CASE("reference split on the collaboration network") {
    const WeightedComplex fig = testsupport::load_fixture("collab_network.json");
    const SplitSets s = kappa_mu_split_reference(fig, 1);
    const KappaMuSplit fast = kappa_mu_split(fig, 1);
    CHECK(s.kappa == fast.kappa);
    CHECK(s.mu == fast.mu);

    std::vector<int> bad_order{0, 0, 1, 2, 3, 4};
    CHECK_THROWS_AS(kappa_mu_split_reference(fig, 1, &bad_order), error);
}

TEST_CASE("check_complex passes on every fixture") {
    for (const char* name : {"collab_network.json", "loop_complex_crossing.json",
                             "projective_plane.json", "sphere.json", "torus.json"}) {
        const WeightedComplex x = testsupport::load_fixture(name);
        const OracleReport rep = check_complex(x, 99);
        CHECK(rep.match);
        CHECK(rep.detail.empty());
        CHECK(rep.checks.all());
    }
    // the small fixtures are within the minor-oracle size gate
    const OracleReport rep =
        check_complex(testsupport::load_fixture("collab_network.json"), 1);
    CHECK(rep.checks.minor_checks_run > 0);
}

TEST_CASE("differential run is deterministic and clean") {
    const auto a = differential_run(42, 8);
    const auto b = differential_run(42, 8);
    REQUIRE(a.size() == 8);
    REQUIRE(b.size() == 8);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].case_id == static_cast<int>(i));
        CHECK(a[i].seed == b[i].seed);
        CHECK(a[i].match == b[i].match);
        CHECK(a[i].detail == b[i].detail);
        CHECK(a[i].match);
        CHECK(a[i].checks.all());
    }
    // different seeds draw different complexes
    const auto c = differential_run(43, 8);
    CHECK(c[0].seed != a[0].seed);
}

TEST_CASE("a planted fault is caught") {
    DifferentialOptions opt;
    opt.fault_case = 2;
    const auto reports = differential_run(7, 4, opt);
    REQUIRE(reports.size() == 4);
    for (const auto& rep : reports) {
        if (rep.case_id == 2) {
            CHECK_FALSE(rep.match);
            CHECK_FALSE(rep.detail.empty());
            CHECK_FALSE(rep.checks.structure_vs_direct);
        } else {
            CHECK(rep.match);
        }
    }
}
