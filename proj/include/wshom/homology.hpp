#pragma once

#include <string>
#include <vector>

#include "wshom/chain_maps.hpp"
#include "wshom/dvr_linalg.hpp"
#include "wshom/weighted_complex.hpp"

namespace wshom {

// Invariants of a finitely generated module over the local ring:
// R^rank (+) R/(pi^d1) (+) ... with the exponents ascending and positive
// (zero exponents contribute nothing and are dropped).
struct ModuleInvariants {
    int rank = 0;
    std::vector<unsigned> torsion;

    bool is_zero_module() const { return rank == 0 && torsion.empty(); }
    bool operator==(const ModuleInvariants& o) const = default;
};

// Bipartition of the n-simplices by the weighted boundary: the images of
// the mu-simplices form a basis of the boundary image, while each kappa
// carries a distinguished kernel cycle. Derived from a column reduction:
// pivot columns are mu, zero columns are kappa.
struct KappaMuSplit {
    int dim = 0;
    std::vector<int> kappa; // ascending indices into the n-simplices
    std::vector<int> mu;    // ascending complement
    ReductionResult reduction;
};

// order, when given, permutes the examination order of the n-simplices:
// order[k] is the index examined with rank k. The kappa count (never the
// homology) may depend on which columns win ties, and in fact does not;
// that is one of the tested invariants.
KappaMuSplit kappa_mu_split(const WeightedComplex& x, int n,
                            const std::vector<int>* order = nullptr);

// The distinguished cycle attached to one kappa: coefficient 1 on kappa
// itself and, on each supporting mu, a monomial of degree
// w(mu) - w(kappa) >= 0. Together they form an R-basis of the kernel.
struct BasisCycle {
    int kappa = 0;
    SparseVec cycle; // full chain vector, including the unit entry at kappa
};

std::vector<BasisCycle> k_basis(const WeightedComplex& x, const KappaMuSplit& split);
std::vector<BasisCycle> k_basis(const WeightedComplex& x, int n,
                                const std::vector<int>* order = nullptr);

// Homology in degree n from the definition: express the degree-(n+1)
// boundary image in kernel-basis coordinates (the kappa-rows of the
// boundary matrix) and read rank and torsion off its Smith normal form.
ModuleInvariants homology_direct(const WeightedComplex& x, int n);

// One matched pair of the torsion pairing: torsion summand
// R/(pi^exponent) realized by an n-simplex kappa and an (n+1)-simplex mu
// with exponent = w(kappa) - w(mu). Exponent 0 is kept here for
// transparency even though it contributes no torsion.
struct TorsionPair {
    int kappa = 0;
    int mu = 0;
    unsigned exponent = 0;
};

struct TorsionPairing {
    std::vector<TorsionPair> pairs; // sorted by (exponent, kappa)
    std::vector<int> free_kappas;   // kappas not matched to any mu, ascending
};

// Homology via the structure decomposition: rank from the residue field,
// torsion realized as a bijection between a subset of the degree-n kappas
// and all degree-(n+1) mus. Must agree with homology_direct; the
// differential suite checks exactly that.
struct StructureResult {
    ModuleInvariants invariants;
    TorsionPairing pairing;
    KappaMuSplit split; // the degree-n split the pairing refers to
};

StructureResult homology_structure(const WeightedComplex& x, int n,
                                   const std::vector<int>* order = nullptr);

// Homology of the quotient chain complex C(X)/theta(C(X)) for a pointwise
// smaller monotone weight assignment. Computed from a free presentation:
// generators of the degree-n kernel of the quotient come from the kernel
// of [boundary | theta], relations from the degree-(n+1) boundary image
// and the theta image.
ModuleInvariants quotient_homology(const WeightedComplex& x, const WeightAssignment& sub, int n);

// Decision for "theta induces an injection on degree-n homology" with the
// constant weighting as source, over the rationals. The verdict is read
// off the integral torsion of the classical homology; a negative verdict
// carries a certified witness.
struct ThetaInjectivityResult {
    int dim = 0;
    bool injective = true;
    std::vector<mpz_class> integral_torsion; // invariant factors > 1 of the integral homology

    // Populated only when not injective: an integer cycle whose integral
    // class is nonzero of the stated order, together with a chain whose
    // weighted boundary equals theta(witness), certifying that the class
    // dies under theta.
    std::map<int, mpz_class> witness;
    mpz_class witness_order = 0;
    SparseVec certificate;
};

ThetaInjectivityResult theta_injectivity(const WeightedComplex& x, int n);

// Homology along the weight filtration: step r keeps the weights up to
// dimension r and flattens everything above to exponent 0. The report
// carries all invariants per step plus the two rank identities the
// filtration satisfies (rank at step n in degree n equals the constant
// weight rank; degree n-1 rank is already stable at step n-1).
struct FiltrationStep {
    int level = 0;
    std::vector<ModuleInvariants> homology; // index = degree, 0..dim X
};

struct FiltrationReport {
    std::vector<FiltrationStep> steps;
    bool rank_identities_hold = true;
    std::vector<std::string> failures;
};

FiltrationReport weight_filtration_report(const WeightedComplex& x);

// dim_F H_n(X, F) by classical elimination over the coefficient field;
// this is also the rank of the weighted homology in degree n.
int field_homology_rank(const WeightedComplex& x, int n);

} // namespace wshom
