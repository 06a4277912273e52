#include "wshom/homology.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wshom/error.hpp"

namespace wshom {

namespace {

void check_degree(const WeightedComplex& x, int n) {
    if (n < 0 || n > x.dim())
        fail(errc::domain_error, "degree " + std::to_string(n) +
                                     " is out of range for a complex of dimension " +
                                     std::to_string(x.dim()));
}

// Rank of the unweighted degree-n boundary over the coefficient field,
// by plain Gauss elimination.
int field_boundary_rank(const WeightedComplex& x, int n) {
    if (n <= 0 || n > x.dim()) return 0;
    const Field f = x.field();
    const int rows = x.size(n - 1), cols = x.size(n);
    std::vector<std::vector<FieldElem>> a(rows, std::vector<FieldElem>(cols, FieldElem(f)));
    for (int j = 0; j < cols; ++j) {
        const Simplex& s = x.simplex(n, j);
        for (int i = 0; i <= n; ++i) {
            const auto row = x.find(s.facet(i));
            if (!row) fail(errc::internal_error, "complex is not face-closed");
            a[*row][j] = FieldElem(f, i % 2 ? -1 : 1);
        }
    }
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        const FieldElem inv = a[rank][c].inverse();
        for (int cc = c; cc < cols; ++cc) a[rank][cc] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            const FieldElem m = a[r][c];
            for (int cc = c; cc < cols; ++cc) a[r][cc] -= m * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

} // namespace

int field_homology_rank(const WeightedComplex& x, int n) {
    if (n < 0 || n > x.dim()) return 0;
    return x.size(n) - field_boundary_rank(x, n) - field_boundary_rank(x, n + 1);
}

KappaMuSplit kappa_mu_split(const WeightedComplex& x, int n, const std::vector<int>* order) {
    check_degree(x, n);
    ReductionResult red = reduce_columns(weighted_boundary(x, n), order);
    std::vector<int> kappa = red.zero_columns;
    std::vector<int> mu;
    mu.reserve(red.pivots.size());
    for (const Pivot& p : red.pivots) mu.push_back(p.col);
    std::sort(mu.begin(), mu.end());
    return KappaMuSplit{n, std::move(kappa), std::move(mu), std::move(red)};
}

std::vector<BasisCycle> k_basis(const WeightedComplex& x, const KappaMuSplit& split) {
    const int n = split.dim;
    std::vector<bool> is_mu(x.size(n), false);
    for (int m : split.mu) is_mu[m] = true;

    std::vector<BasisCycle> out;
    out.reserve(split.kappa.size());
    for (int k : split.kappa) {
        BasisCycle bc{k, split.reduction.transform.column(k)};
        // The transform column over a zero column is the distinguished
        // cycle itself; its shape laws are cheap to audit, so audit them.
        const auto at_k = bc.cycle.find(k);
        if (at_k == bc.cycle.end() || !at_k->second.is_one())
            fail(errc::internal_error, "distinguished cycle lost its unit coefficient");
        for (const auto& [idx, v] : bc.cycle) {
            if (idx == k) continue;
            if (!is_mu[idx] || !v.is_monomial() ||
                static_cast<int>(v.monomial_degree()) != x.weight(n, idx) - x.weight(n, k))
                fail(errc::internal_error, "distinguished cycle violates the monomial degree law");
        }
        out.push_back(std::move(bc));
    }
    return out;
}

std::vector<BasisCycle> k_basis(const WeightedComplex& x, int n, const std::vector<int>* order) {
    return k_basis(x, kappa_mu_split(x, n, order));
}

ModuleInvariants homology_direct(const WeightedComplex& x, int n) {
    check_degree(x, n);
    const KappaMuSplit split = kappa_mu_split(x, n);
    const int free_rank = static_cast<int>(split.kappa.size());
    if (n == x.dim()) return ModuleInvariants{free_rank, {}};

    // In the distinguished kernel basis, the coordinates of a cycle are
    // simply its kappa-entries, so the image of the upstairs boundary is
    // presented by the kappa-row block of its matrix.
    const SparseMatrix b = weighted_boundary(x, n + 1).select_rows(split.kappa);
    const SNFResult snf = smith_normal_form(b);
    ModuleInvariants out;
    out.rank = free_rank - snf.rank();
    for (unsigned e : snf.exponents)
        if (e > 0) out.torsion.push_back(e);
    return out;
}

namespace {

// Fallback pairing search: a bijection from all upstairs mu-simplices
// into the kappas whose weight differences realize the target exponent
// multiset. Plain backtracking; the greedy pivot pairing makes this
// unreachable in practice and the sizes are tiny anyway.
std::optional<std::vector<TorsionPair>> match_pairing(const WeightedComplex& x, int n,
                                                      const std::vector<int>& kappa,
                                                      const std::vector<int>& mu_up,
                                                      const std::vector<unsigned>& target) {
    if (mu_up.size() != target.size()) return std::nullopt;
    std::multiset<unsigned> remaining(target.begin(), target.end());
    std::vector<bool> used(kappa.size(), false);
    std::vector<TorsionPair> acc;
    std::function<bool(size_t)> place = [&](size_t j) {
        if (j == mu_up.size()) return true;
        for (size_t i = 0; i < kappa.size(); ++i) {
            if (used[i]) continue;
            const int diff = x.weight(n, kappa[i]) - x.weight(n + 1, mu_up[j]);
            if (diff < 0) continue;
            const auto it = remaining.find(static_cast<unsigned>(diff));
            if (it == remaining.end()) continue;
            used[i] = true;
            remaining.erase(it);
            acc.push_back(TorsionPair{kappa[i], mu_up[j], static_cast<unsigned>(diff)});
            if (place(j + 1)) return true;
            acc.pop_back();
            remaining.insert(static_cast<unsigned>(diff));
            used[i] = false;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return acc;
}

} // namespace

StructureResult homology_structure(const WeightedComplex& x, int n, const std::vector<int>* order) {
    check_degree(x, n);
    KappaMuSplit split = kappa_mu_split(x, n, order);
    ModuleInvariants inv;
    inv.rank = field_homology_rank(x, n);
    TorsionPairing pairing;
    if (n == x.dim()) {
        pairing.free_kappas = split.kappa;
        return StructureResult{std::move(inv), std::move(pairing), std::move(split)};
    }

    const KappaMuSplit upstairs = kappa_mu_split(x, n + 1);
    const SparseMatrix b =
        weighted_boundary(x, n + 1).select_rows(split.kappa).select_columns(upstairs.mu);
    const ReductionResult red = reduce_columns(b);
    if (red.pivots.size() != upstairs.mu.size())
        fail(errc::internal_error, "boundary images of the mu-simplices are dependent");
    const SNFResult snf = smith_normal_form(b);

    // Greedy pairing straight off the reduction pivots. Each pivot's
    // valuation should be the weight difference of its own (kappa, mu)
    // pair and the valuations should reproduce the invariant factors;
    // both are checked, with a matching search as the fallback.
    std::vector<TorsionPair> pairs;
    std::vector<unsigned> vals;
    bool greedy_ok = true;
    for (const Pivot& p : red.pivots) {
        const int kap = split.kappa[p.row];
        const int mu = upstairs.mu[p.col];
        const int diff = x.weight(n, kap) - x.weight(n + 1, mu);
        if (diff < 0 || static_cast<unsigned>(diff) != p.valuation) {
            greedy_ok = false;
            break;
        }
        pairs.push_back(TorsionPair{kap, mu, p.valuation});
        vals.push_back(p.valuation);
    }
    if (greedy_ok) {
        std::sort(vals.begin(), vals.end());
        greedy_ok = vals == snf.exponents;
    }
    if (!greedy_ok) {
        auto matched = match_pairing(x, n, split.kappa, upstairs.mu, snf.exponents);
        if (!matched) fail(errc::internal_error, "torsion pairing construction failed");
        pairs = std::move(*matched);
    }

    std::sort(pairs.begin(), pairs.end(), [](const TorsionPair& a, const TorsionPair& b) {
        return a.exponent != b.exponent ? a.exponent < b.exponent : a.kappa < b.kappa;
    });
    std::set<int> paired;
    for (const TorsionPair& p : pairs) {
        paired.insert(p.kappa);
        if (p.exponent > 0) inv.torsion.push_back(p.exponent);
    }
    std::sort(inv.torsion.begin(), inv.torsion.end());
    for (int k : split.kappa)
        if (!paired.count(k)) pairing.free_kappas.push_back(k);
    pairing.pairs = std::move(pairs);
    return StructureResult{std::move(inv), std::move(pairing), std::move(split)};
}

ModuleInvariants quotient_homology(const WeightedComplex& x, const WeightAssignment& sub, int n) {
    check_degree(x, n);
    // The sub-weighting must itself be a valid weighting (theta's source
    // complex) and must sit pointwise under the main one.
    x.with_weights(sub);
    for (int d = 0; d <= x.dim(); ++d)
        for (int i = 0; i < x.size(d); ++i)
            if (sub[d][i] > x.weight(d, i))
                fail(errc::domain_error,
                     "theta is undefined: sub-weight of " + x.label(d, i) + " exceeds its weight");

    const Field f = x.field();
    const int cn = x.size(n);

    // Generators of L = { chains whose boundary lands in the theta image }
    // come from projecting the kernel of [boundary | theta] to the chain
    // block. In degree 0 the boundary vanishes and L is everything.
    std::vector<SparseVec> gens;
    if (n == 0) {
        for (int i = 0; i < cn; ++i) gens.push_back(SparseVec{{i, LocalElement::one(f)}});
    } else {
        const SparseMatrix aug = weighted_boundary(x, n).augmented(theta_matrix(x, sub, n - 1));
        for (SparseVec& v : kernel_basis(aug)) {
            SparseVec head;
            for (auto& [i, c] : v)
                if (i < cn) head.emplace(i, std::move(c));
            if (!head.empty()) gens.push_back(std::move(head));
        }
    }

    SparseMatrix g(f, cn, static_cast<int>(gens.size()));
    for (int c = 0; c < g.cols(); ++c) g.set_column(c, std::move(gens[c]));
    const ReductionResult gred = reduce_columns(g);
    std::vector<int> basis_cols;
    for (const Pivot& p : gred.pivots) basis_cols.push_back(p.col);
    std::sort(basis_cols.begin(), basis_cols.end());
    const SparseMatrix basis = gred.reduced.select_columns(basis_cols);
    const int free_rank = basis.cols();
    if (free_rank == 0) return ModuleInvariants{};

    // Relations: the upstairs boundary image plus the theta image, both
    // of which lie in L, expressed in the chosen basis.
    const SparseMatrix rel = n < x.dim()
                                 ? weighted_boundary(x, n + 1).augmented(theta_matrix(x, sub, n))
                                 : theta_matrix(x, sub, n);
    const ColumnSolver solver(basis);
    SparseMatrix w(f, free_rank, rel.cols());
    for (int c = 0; c < rel.cols(); ++c) {
        MembershipResult mr = solver.solve(rel.column(c));
        if (mr.status != membership::solved)
            fail(errc::internal_error, "quotient relation escapes the kernel lattice");
        w.set_column(c, std::move(mr.x));
    }
    const SNFResult snf = smith_normal_form(w);
    ModuleInvariants out;
    out.rank = free_rank - snf.rank();
    for (unsigned e : snf.exponents)
        if (e > 0) out.torsion.push_back(e);
    return out;
}

namespace {

IntMatrix integer_boundary(const WeightedComplex& x, int n) {
    const int rows = n >= 1 ? x.size(n - 1) : 0;
    const int cols = n >= 1 && n <= x.dim() ? x.size(n) : 0;
    IntMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        const Simplex& s = x.simplex(n, j);
        for (int i = 0; i <= n; ++i) {
            const auto row = x.find(s.facet(i));
            if (!row) fail(errc::internal_error, "complex is not face-closed");
            m.a[*row][j] = (i % 2) ? -1 : 1;
        }
    }
    return m;
}

} // namespace

ThetaInjectivityResult theta_injectivity(const WeightedComplex& x, int n) {
    if (x.field().kind != field_kind::rationals)
        fail(errc::domain_error, "theta injectivity analysis requires rational coefficients");
    check_degree(x, n);

    ThetaInjectivityResult out;
    out.dim = n;
    const IntMatrix bd_up = integer_boundary(x, n + 1);
    const IntSNFResult snf = integer_snf(bd_up);
    int first = -1;
    for (size_t i = 0; i < snf.factors.size(); ++i)
        if (snf.factors[i] > 1) {
            if (first < 0) first = static_cast<int>(i);
            out.integral_torsion.push_back(snf.factors[i]);
        }
    out.injective = out.integral_torsion.empty();
    if (out.injective) return out;

    // Witness construction: with U * bd * V diagonal and d > 1 in slot k,
    // the chain c = bd * (V e_k) / d is integral, is a cycle, and its
    // integral class has order exactly d. Divide explicitly instead of
    // inverting U.
    const mpz_class d = snf.factors[first];
    const int rows = bd_up.rows, cols = bd_up.cols;
    std::vector<mpz_class> c(rows);
    for (int i = 0; i < rows; ++i) {
        mpz_class acc = 0;
        for (int j = 0; j < cols; ++j) acc += bd_up.a[i][j] * snf.right.a[j][first];
        if (acc % d != 0) fail(errc::internal_error, "torsion witness is not integral");
        c[i] = acc / d;
    }
    if (n >= 1) {
        const IntMatrix bd = integer_boundary(x, n);
        for (int i = 0; i < bd.rows; ++i) {
            mpz_class acc = 0;
            for (int j = 0; j < bd.cols; ++j) acc += bd.a[i][j] * c[j];
            if (acc != 0) fail(errc::internal_error, "torsion witness is not a cycle");
        }
    }
    // The class must be nonzero: U c has to be unsolvable against the
    // diagonal. Checked honestly rather than trusted.
    bool bounds = true;
    for (int i = 0; i < rows && bounds; ++i) {
        mpz_class zi = 0;
        for (int j = 0; j < rows; ++j) zi += snf.left.a[i][j] * c[j];
        if (i < snf.rank()) {
            if (zi % snf.factors[i] != 0) bounds = false;
        } else if (zi != 0) {
            bounds = false;
        }
    }
    if (bounds) fail(errc::internal_error, "torsion witness bounds integrally");

    for (int i = 0; i < rows; ++i)
        if (c[i] != 0) out.witness.emplace(i, c[i]);
    out.witness_order = d;

    // theta(c) against the weighted boundary: solvable over R because
    // d * c bounds integrally and d is invertible over the rationals.
    const Field f = x.field();
    SparseVec theta_c;
    for (const auto& [i, v] : out.witness)
        theta_c.emplace(i, LocalElement::monomial(f, FieldElem(f, mpq_class(v)),
                                                  static_cast<unsigned>(x.weight(n, i))));
    MembershipResult cert = solve_membership(weighted_boundary(x, n + 1), theta_c);
    if (cert.status != membership::solved)
        fail(errc::internal_error, "theta image of the witness does not bound");
    out.certificate = std::move(cert.x);
    return out;
}

FiltrationReport weight_filtration_report(const WeightedComplex& x) {
    FiltrationReport rep;
    const int dim = x.dim();
    if (dim < 0) return rep;

    for (int r = 0; r <= dim; ++r) {
        WeightAssignment w = x.weights();
        for (int d = r + 1; d <= dim; ++d) std::fill(w[d].begin(), w[d].end(), 0);
        const WeightedComplex xr = x.with_weights(w);
        FiltrationStep step;
        step.level = r;
        for (int k = 0; k <= dim; ++k) step.homology.push_back(homology_direct(xr, k));
        rep.steps.push_back(std::move(step));
    }

    const auto complain = [&rep](std::string msg) {
        rep.rank_identities_hold = false;
        rep.failures.push_back(std::move(msg));
    };
    for (int k = 0; k <= dim; ++k) {
        const int expect = field_homology_rank(x, k);
        if (rep.steps[k].homology[k].rank != expect)
            complain("step " + std::to_string(k) + ": degree " + std::to_string(k) + " rank " +
                     std::to_string(rep.steps[k].homology[k].rank) +
                     " differs from the constant-weight rank " + std::to_string(expect));
        if (k >= 1 && rep.steps[k].homology[k - 1].rank != rep.steps[k - 1].homology[k - 1].rank)
            complain("degree " + std::to_string(k - 1) + " rank changes between steps " +
                     std::to_string(k - 1) + " and " + std::to_string(k));
    }
    return rep;
}

} // namespace wshom
