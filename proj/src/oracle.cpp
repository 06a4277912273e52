#include "wshom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "wshom/chain_maps.hpp"
#include "wshom/error.hpp"

namespace wshom {

namespace {

// Determinant of a small dense block by the subset DP: dp[mask] collects
// the signed products of bijections from the first popcount(mask) rows
// onto the column set mask. Exact and allocation-light for k <= 10.
LocalElement subset_dp_det(const Field& f, const std::vector<std::vector<LocalElement>>& a) {
    const unsigned k = static_cast<unsigned>(a.size());
    const size_t full = size_t(1) << k;
    std::vector<LocalElement> dp(full, LocalElement::zero(f));
    dp[0] = LocalElement::one(f);
    for (size_t mask = 0; mask + 1 < full; ++mask) {
        if (dp[mask].is_zero()) continue;
        const unsigned r = static_cast<unsigned>(std::popcount(mask));
        for (unsigned j = 0; j < k; ++j) {
            if (mask & (size_t(1) << j)) continue;
            const LocalElement& e = a[r][j];
            if (e.is_zero()) continue;
            if (std::popcount(mask >> (j + 1)) % 2)
                dp[mask | (size_t(1) << j)] -= dp[mask] * e;
            else
                dp[mask | (size_t(1) << j)] += dp[mask] * e;
        }
    }
    return dp[full - 1];
}

bool next_subset(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

} // namespace

std::vector<unsigned> minor_valuation_invariants(const SparseMatrix& m) {
    const Field f = m.field();
    std::vector<char> row_hit(static_cast<size_t>(m.rows()), 0);
    std::vector<int> cols;
    for (int c = 0; c < m.cols(); ++c) {
        if (m.column(c).empty()) continue;
        cols.push_back(c);
        for (const auto& [r, v] : m.column(c)) row_hit[static_cast<size_t>(r)] = 1;
    }
    std::vector<int> rows;
    for (int r = 0; r < m.rows(); ++r)
        if (row_hit[static_cast<size_t>(r)]) rows.push_back(r);

    const int nr = static_cast<int>(rows.size()), nc = static_cast<int>(cols.size());
    if (std::min(nr, nc) > 10)
        fail(errc::domain_error, "matrix too large for minor enumeration");

    std::vector<std::vector<LocalElement>> a(static_cast<size_t>(nr),
                                             std::vector<LocalElement>(static_cast<size_t>(nc),
                                                                       LocalElement::zero(f)));
    for (int q = 0; q < nc; ++q)
        for (const auto& [r, v] : m.column(cols[static_cast<size_t>(q)])) {
            const int p = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), r) - rows.begin());
            a[static_cast<size_t>(p)][static_cast<size_t>(q)] = v;
        }

    std::vector<unsigned> out;
    unsigned prev = 0;
    std::vector<std::vector<LocalElement>> sub;
    for (int k = 1; k <= std::min(nr, nc); ++k) {
        Valuation best = Valuation::inf();
        std::vector<int> ri(static_cast<size_t>(k));
        std::iota(ri.begin(), ri.end(), 0);
        do {
            std::vector<int> ci(static_cast<size_t>(k));
            std::iota(ci.begin(), ci.end(), 0);
            do {
                sub.assign(static_cast<size_t>(k),
                           std::vector<LocalElement>(static_cast<size_t>(k), LocalElement::zero(f)));
                for (int p = 0; p < k; ++p)
                    for (int q = 0; q < k; ++q)
                        sub[static_cast<size_t>(p)][static_cast<size_t>(q)] =
                            a[static_cast<size_t>(ri[static_cast<size_t>(p)])]
                             [static_cast<size_t>(ci[static_cast<size_t>(q)])];
                const Valuation v = subset_dp_det(f, sub).valuation();
                if (v < best) best = v;
            } while (next_subset(ci, nc));
        } while (next_subset(ri, nr));
        if (best.infinite) break;
        out.push_back(best.value - prev);
        prev = best.value;
    }
    return out;
}

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat integer_boundary_dense(const WeightedComplex& x, int n) {
    const int rows = n >= 1 ? x.size(n - 1) : 0;
    const int cols = n >= 1 && n <= x.dim() ? x.size(n) : 0;
    ZMat m(static_cast<size_t>(rows), std::vector<mpz_class>(static_cast<size_t>(cols)));
    for (int j = 0; j < cols; ++j) {
        const Simplex& s = x.simplex(n, j);
        for (int i = 0; i <= n; ++i) {
            const auto row = x.find(s.facet(i));
            if (!row) fail(errc::internal_error, "complex is not face-closed");
            m[static_cast<size_t>(*row)][static_cast<size_t>(j)] = (i % 2) ? -1 : 1;
        }
    }
    return m;
}

// Diagonal invariant factors by extended-gcd elimination: every clearing
// step is a unimodular 2x2 block built from a Bezout identity, never a
// division chain. Kept deliberately unlike integer_snf.
std::vector<mpz_class> bezout_factors(ZMat a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<mpz_class> fac;
    if (!rows || !cols) return fac;

    const auto row_block = [&](int r1, int r2, const mpz_class& u, const mpz_class& v,
                               const mpz_class& s, const mpz_class& t) {
        for (int j = 0; j < cols; ++j) {
            const mpz_class x1 = a[static_cast<size_t>(r1)][static_cast<size_t>(j)];
            const mpz_class x2 = a[static_cast<size_t>(r2)][static_cast<size_t>(j)];
            a[static_cast<size_t>(r1)][static_cast<size_t>(j)] = u * x1 + v * x2;
            a[static_cast<size_t>(r2)][static_cast<size_t>(j)] = s * x1 + t * x2;
        }
    };
    const auto col_block = [&](int c1, int c2, const mpz_class& u, const mpz_class& v,
                               const mpz_class& s, const mpz_class& t) {
        for (int i = 0; i < rows; ++i) {
            const mpz_class x1 = a[static_cast<size_t>(i)][static_cast<size_t>(c1)];
            const mpz_class x2 = a[static_cast<size_t>(i)][static_cast<size_t>(c2)];
            a[static_cast<size_t>(i)][static_cast<size_t>(c1)] = u * x1 + v * x2;
            a[static_cast<size_t>(i)][static_cast<size_t>(c2)] = s * x1 + t * x2;
        }
    };

    // Pivot on the smallest surviving |entry|. The Bezout coefficients u, v
    // are bounded by the operands of the gcd, so a small pivot keeps the 2x2
    // blocks from snowballing the intermediate entries.
    const auto swap_in_pivot = [&](int k) {
        int pi = -1, pj = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                const mpz_class& e = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (e == 0) continue;
                if (pi < 0 || mpz_cmpabs(e.get_mpz_t(),
                                         a[static_cast<size_t>(pi)][static_cast<size_t>(pj)]
                                             .get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) return false;
        std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pi)]);
        if (pj != k)
            for (int i = 0; i < rows; ++i)
                std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(k)],
                          a[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
        return true;
    };

    const int bound = std::min(rows, cols);
    for (int k = 0; k < bound; ++k) {
        if (!swap_in_pivot(k)) break;

        while (true) {
            swap_in_pivot(k);
            for (int i = k + 1; i < rows; ++i) {
                const mpz_class& e = a[static_cast<size_t>(i)][static_cast<size_t>(k)];
                if (e == 0) continue;
                const mpz_class& p = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
                if (e % p == 0) {
                    // Plain subtraction. gcdext(p, e) would also clear the
                    // entry, but its cofactors may swap the two rows (GMP
                    // can return u = 0, v = 1 here), re-dirtying row k and
                    // cycling against the column pass below.
                    const mpz_class q = e / p;
                    for (int j = 0; j < cols; ++j)
                        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                            q * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                    continue;
                }
                mpz_class g, u, v;
                mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t(),
                           e.get_mpz_t());
                const mpz_class s = -e / g;
                const mpz_class t = p / g;
                row_block(k, i, u, v, s, t);
            }
            bool col_ops = false;
            for (int j = k + 1; j < cols; ++j) {
                const mpz_class& e = a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                if (e == 0) continue;
                const mpz_class& p = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
                if (e % p == 0) {
                    const mpz_class q = e / p;
                    for (int i = 0; i < rows; ++i)
                        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                            q * a[static_cast<size_t>(i)][static_cast<size_t>(k)];
                    continue;
                }
                mpz_class g, u, v;
                mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t(),
                           e.get_mpz_t());
                const mpz_class s = -e / g;
                const mpz_class t = p / g;
                col_block(k, j, u, v, s, t);
                col_ops = true;
            }
            if (col_ops) continue; // column blocks may have refilled column k
            bool patched = false;
            for (int i = k + 1; i < rows && !patched; ++i)
                for (int j = k + 1; j < cols && !patched; ++j)
                    if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] %
                            a[static_cast<size_t>(k)][static_cast<size_t>(k)] !=
                        0) {
                        for (int jj = 0; jj < cols; ++jj)
                            a[static_cast<size_t>(k)][static_cast<size_t>(jj)] +=
                                a[static_cast<size_t>(i)][static_cast<size_t>(jj)];
                        patched = true;
                    }
            if (!patched) break;
        }
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] < 0)
            for (int j = 0; j < cols; ++j)
                a[static_cast<size_t>(k)][static_cast<size_t>(j)] =
                    -a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        fac.push_back(a[static_cast<size_t>(k)][static_cast<size_t>(k)]);
    }
    for (size_t i = 1; i < fac.size(); ++i)
        if (fac[i] % fac[i - 1] != 0)
            fail(errc::internal_error, "reference invariant factors do not divide in order");
    return fac;
}

} // namespace

std::vector<mpz_class> bezout_invariant_factors(const IntMatrix& m) {
    return bezout_factors(m.a);
}

IntegerHomology integer_homology(const WeightedComplex& x, int n) {
    IntegerHomology out;
    if (n < 0 || n > x.dim()) return out;
    const std::vector<mpz_class> up = bezout_factors(integer_boundary_dense(x, n + 1));
    out.rank = x.size(n) - static_cast<int>(bezout_factors(integer_boundary_dense(x, n)).size()) -
               static_cast<int>(up.size());
    for (const mpz_class& d : up)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

SplitSets kappa_mu_split_reference(const WeightedComplex& x, int n,
                                   const std::vector<int>* order) {
    if (n < 0 || n > x.dim())
        fail(errc::domain_error, "degree " + std::to_string(n) +
                                     " is out of range for a complex of dimension " +
                                     std::to_string(x.dim()));
    const SparseMatrix d = weighted_boundary(x, n);
    const int count = d.cols();
    std::vector<int> sequence(static_cast<size_t>(count));
    if (order) {
        if (static_cast<int>(order->size()) != count)
            fail(errc::domain_error, "column priority is not a permutation");
        std::vector<bool> seen(static_cast<size_t>(count), false);
        for (int c : *order) {
            if (c < 0 || c >= count || seen[static_cast<size_t>(c)])
                fail(errc::domain_error, "column priority is not a permutation");
            seen[static_cast<size_t>(c)] = true;
        }
        sequence = *order;
    } else {
        std::iota(sequence.begin(), sequence.end(), 0);
    }

    SplitSets out;
    std::vector<int> kept; // current mu list, in acquisition order
    for (int c : sequence) {
        std::vector<int> cols = kept;
        cols.push_back(c);
        const std::vector<SparseVec> ker = kernel_basis(d.select_columns(cols));
        if (ker.empty()) {
            kept.push_back(c);
            continue;
        }
        if (ker.size() > 1)
            fail(errc::internal_error, "kept boundary images became dependent");
        const SparseVec& z = ker.front();
        const int newcomer = static_cast<int>(cols.size()) - 1;
        const auto at_new = z.find(newcomer);
        if (at_new != z.end() && at_new->second.is_unit()) {
            out.kappa.push_back(c); // the relation solves for the newcomer
            continue;
        }
        int displaced = -1;
        for (const auto& [i, v] : z)
            if (i != newcomer && v.is_unit()) {
                displaced = i;
                break;
            }
        if (displaced < 0)
            fail(errc::internal_error, "kernel relation has no unit coefficient");
        out.kappa.push_back(kept[static_cast<size_t>(displaced)]);
        kept[static_cast<size_t>(displaced)] = c;
    }
    out.mu = std::move(kept);
    std::sort(out.kappa.begin(), out.kappa.end());
    std::sort(out.mu.begin(), out.mu.end());
    return out;
}

namespace {

WeightAssignment zero_weights(const WeightedComplex& x) {
    WeightAssignment w(static_cast<size_t>(x.dim() + 1));
    for (int d = 0; d <= x.dim(); ++d)
        w[static_cast<size_t>(d)].assign(static_cast<size_t>(x.size(d)), 0);
    return w;
}

int dense_field_rank(std::vector<std::vector<FieldElem>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(rank)], a[static_cast<size_t>(piv)]);
        const FieldElem inv = a[static_cast<size_t>(rank)][static_cast<size_t>(c)].inverse();
        for (int cc = c; cc < cols; ++cc) a[static_cast<size_t>(rank)][static_cast<size_t>(cc)] *= inv;
        for (int r = rank + 1; r < rows; ++r) {
            const FieldElem m = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (m.is_zero()) continue;
            for (int cc = c; cc < cols; ++cc)
                a[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
                    m * a[static_cast<size_t>(rank)][static_cast<size_t>(cc)];
        }
        ++rank;
    }
    return rank;
}

bool verify_basis_laws(const WeightedComplex& x, int n, std::string& why) {
    const Field f = x.field();
    const KappaMuSplit split = kappa_mu_split(x, n);
    const std::vector<BasisCycle> basis = k_basis(x, split);
    const SparseMatrix d = weighted_boundary(x, n);
    const SparseMatrix th = theta_matrix(x, zero_weights(x), n);

    std::vector<std::vector<FieldElem>> gamma(
        static_cast<size_t>(x.size(n)),
        std::vector<FieldElem>(basis.size(), FieldElem(f)));
    for (size_t b = 0; b < basis.size(); ++b) {
        const BasisCycle& bc = basis[b];
        if (!d.apply(bc.cycle).empty()) {
            why = "distinguished cycle has a nonzero boundary";
            return false;
        }
        SparseVec flat; // the cycle with every coefficient scaled to degree zero
        for (const auto& [idx, v] : bc.cycle) {
            if (idx == bc.kappa) {
                if (!v.is_one()) {
                    why = "distinguished cycle lost its unit coefficient";
                    return false;
                }
                flat.emplace(idx, v);
                gamma[static_cast<size_t>(idx)][b] = v.residue();
                continue;
            }
            const int deg = x.weight(n, idx) - x.weight(n, bc.kappa);
            if (deg < 0 || !v.is_monomial() || static_cast<int>(v.monomial_degree()) != deg) {
                why = "coefficient violates the monomial degree law";
                return false;
            }
            flat.emplace(idx, LocalElement::monomial(f, v.monomial_coeff(), 0));
            gamma[static_cast<size_t>(idx)][b] = v.monomial_coeff();
        }
        // theta of the flattened cycle must be pi^{w(kappa)} times the cycle
        SparseVec rhs;
        vec_axpy(rhs, LocalElement::pi_power(f, static_cast<unsigned>(x.weight(n, bc.kappa))),
                 bc.cycle);
        if (th.apply(flat) != rhs) {
            why = "theta does not carry the residue cycle onto the distinguished one";
            return false;
        }
    }
    if (dense_field_rank(std::move(gamma)) != static_cast<int>(basis.size())) {
        why = "residue cycles are dependent over the field";
        return false;
    }
    return true;
}

bool verify_skeleton_quotient(const WeightedComplex& x, int n, std::string& why) {
    const WeightedComplex sk = x.skeleton(n);
    const ModuleInvariants inv = quotient_homology(sk, zero_weights(sk), n);
    std::vector<unsigned> expect;
    for (int k : kappa_mu_split(sk, n).kappa)
        if (sk.weight(n, k) > 0) expect.push_back(static_cast<unsigned>(sk.weight(n, k)));
    std::sort(expect.begin(), expect.end());
    if (inv.rank != 0 || inv.torsion != expect) {
        why = "skeleton quotient invariants differ from the kappa weights";
        return false;
    }
    return true;
}

bool verify_minor_oracle(const WeightedComplex& x, int n, int& ran, std::string& why) {
    if (n == x.dim()) return true;
    const KappaMuSplit split = kappa_mu_split(x, n);
    const SparseMatrix b = weighted_boundary(x, n + 1).select_rows(split.kappa);
    int live_cols = 0;
    std::vector<char> row_hit(static_cast<size_t>(b.rows()), 0);
    for (int c = 0; c < b.cols(); ++c) {
        if (b.column(c).empty()) continue;
        ++live_cols;
        for (const auto& [r, v] : b.column(c)) row_hit[static_cast<size_t>(r)] = 1;
    }
    const int live_rows = static_cast<int>(std::count(row_hit.begin(), row_hit.end(), 1));
    if (std::max(live_rows, live_cols) > 5) return true; // size-skipped
    ++ran;
    if (minor_valuation_invariants(b) != smith_normal_form(b).exponents) {
        why = "invariant factors disagree with the minor oracle";
        return false;
    }
    return true;
}

// Fixed fixture for the fault-injection self-test: one edge with a
// weight gap, so a vertex-weight perturbation provably moves the
// degree-0 torsion.
WeightedComplex fault_fixture(Field f) {
    return WeightedComplex::build(
        f, {SimplexEntry{Simplex{{0}}, 5}, SimplexEntry{Simplex{{1}}, 5},
            SimplexEntry{Simplex{{0, 1}}, 2}});
}

// One full verifier sweep. x is the complex every check runs on; xs is
// the complex handed to homology_structure, which only differs from x
// inside the fault-injection self-test.
void run_complex_checks(const WeightedComplex& x, const WeightedComplex& xs,
                        std::uint64_t nat_seed, OracleReport& rep) {
    auto note = [&rep](bool ok, const std::string& what) {
        if (!ok && rep.match) {
            rep.match = false;
            rep.detail = what;
        }
        return ok;
    };
    CaseChecks& c = rep.checks;
    c.chain_complex &= note(check_chain_complex(x), "boundary of boundary is nonzero");
    {
        std::mt19937_64 rng(nat_seed);
        const WeightAssignment sub = random_subweights(x, rng);
        c.naturality &= note(check_naturality(x, sub), "theta naturality square does not commute");
    }
    for (int n = 0; n <= x.dim(); ++n) {
        const ModuleInvariants direct = homology_direct(x, n);
        const StructureResult st = homology_structure(xs, n);
        c.structure_vs_direct &=
            note(st.invariants == direct,
                 "structure invariants differ from the direct computation in degree " +
                     std::to_string(n));
        c.rank_over_field &= note(direct.rank == field_homology_rank(x, n),
                                  "rank differs from the field homology rank in degree " +
                                      std::to_string(n));
        std::string why;
        if (!verify_basis_laws(x, n, why)) c.basis_laws &= note(false, why);
        if (x.size(n) <= 25) {
            const SplitSets ref = kappa_mu_split_reference(x, n);
            c.split_reference &= note(ref.kappa.size() == kappa_mu_split(x, n).kappa.size(),
                                      "reference split disagrees on the kappa count in degree " +
                                          std::to_string(n));
        }
        if (!verify_skeleton_quotient(x, n, why)) c.skeleton_quotient_torsion &= note(false, why);
        if (!verify_minor_oracle(x, n, c.minor_checks_run, why))
            c.snf_vs_minor_oracle &= note(false, why);
    }
}

} // namespace

OracleReport check_complex(const WeightedComplex& x, std::uint64_t seed) {
    OracleReport rep;
    rep.case_id = 0;
    rep.seed = seed;
    rep.match = true;
    rep.checks = CaseChecks{true, true, true, true, true, true, true, true, 0};
    run_complex_checks(x, x, seed, rep);
    return rep;
}

std::vector<OracleReport> differential_run(std::uint64_t seed, int cases,
                                           const DifferentialOptions& opt) {
    std::vector<OracleReport> out;
    out.reserve(static_cast<size_t>(std::max(cases, 0)));
    for (int id = 0; id < cases; ++id) {
        OracleReport rep;
        rep.case_id = id;
        rep.seed = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(id + 1);
        rep.match = true;
        rep.checks = CaseChecks{true, true, true, true, true, true, true, true, 0};

        const bool fault = id == opt.fault_case;
        const WeightedComplex base =
            fault ? fault_fixture(Field::rationals()) : random_complex(Field::rationals(), rep.seed, opt.params);

        for (int pass = 0; pass < 2; ++pass) {
            const Field f = pass ? Field::prime(2) : Field::rationals();
            const WeightedComplex x =
                pass ? WeightedComplex::build(f, base.entries(), base.names()) : base;

            // The fault self-test perturbs the weights between the two
            // homology computations; every other check sees the real
            // complex, so only the cross-comparison can trip.
            WeightedComplex xs = x;
            if (fault) {
                WeightAssignment w = x.weights();
                for (int& v : w[0]) ++v;
                xs = x.with_weights(w);
            }
            run_complex_checks(x, xs, rep.seed ^ (pass ? 0x5851f42d4c957f2dULL : 0x14057b7ef767814fULL),
                               rep);
        }
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace wshom
