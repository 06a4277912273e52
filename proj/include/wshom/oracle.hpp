#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wshom/generator.hpp"
#include "wshom/homology.hpp"

namespace wshom {

// Invariant factor exponents by the determinant-divisor route: over the
// local ring the k-th determinantal divisor has valuation equal to the
// minimum over all k x k minors, and the factor exponents are successive
// differences. Exponential in the matrix size; errc::domain_error when
// the smaller dimension exceeds 10 after discarding zero rows/columns.
// Shares nothing with smith_normal_form, which is the point.
std::vector<unsigned> minor_valuation_invariants(const SparseMatrix& m);

// Classical homology over the integers by Bezout-combination
// elimination: a second integer Smith normal form that shares no
// mechanism with integer_snf (extended-gcd 2x2 blocks instead of
// division with remainder, no transforms).
struct IntegerHomology {
    int rank = 0;
    std::vector<mpz_class> torsion; // invariant factors > 1, divisibility chain
};

IntegerHomology integer_homology(const WeightedComplex& x, int n);

// The Bezout elimination itself, on an arbitrary integer matrix. Public
// so the two integer Smith forms can be differentially tested against
// each other.
std::vector<mpz_class> bezout_invariant_factors(const IntMatrix& m);

// The replace-or-keep reference procedure for the kappa/mu bipartition:
// walk the simplices in order, keep each as mu while the boundary images
// stay independent; otherwise the kernel relation either has a unit on
// the newcomer (it becomes kappa) or forces a swap with a mu whose
// coefficient is a unit. Much slower than the reduction-based split but
// follows the defining procedure step by step.
struct SplitSets {
    std::vector<int> kappa, mu; // ascending
};

SplitSets kappa_mu_split_reference(const WeightedComplex& x, int n,
                                   const std::vector<int>* order = nullptr);

// Per-case outcome flags of the differential runner. minor-oracle checks
// are size-gated, so their counter says how many actually ran.
struct CaseChecks {
    bool chain_complex = false;
    bool naturality = false;
    bool structure_vs_direct = false;
    bool rank_over_field = false;
    bool basis_laws = false;
    bool split_reference = false;
    bool skeleton_quotient_torsion = false;
    bool snf_vs_minor_oracle = false; // also true when every instance was size-skipped
    int minor_checks_run = 0;

    bool all() const {
        return chain_complex && naturality && structure_vs_direct && rank_over_field &&
               basis_laws && split_reference && skeleton_quotient_torsion && snf_vs_minor_oracle;
    }
};

struct OracleReport {
    int case_id = 0;
    std::uint64_t seed = 0;
    CaseChecks checks;
    bool match = false;
    std::string detail; // first failure, empty on match
};

struct DifferentialOptions {
    GeneratorParams params;
    int fault_case = -1; // this case runs with a mid-case weight perturbation (self-test)
};

// Runs every deterministic verifier on one given complex; the seed only
// feeds the subweight draw of the naturality check.
OracleReport check_complex(const WeightedComplex& x, std::uint64_t seed);

// Runs `cases` seeded random complexes through every cross-check, over
// the rationals and over F_2. Deterministic in (seed, cases, options).
std::vector<OracleReport> differential_run(std::uint64_t seed, int cases,
                                           const DifferentialOptions& opt = {});

} // namespace wshom
