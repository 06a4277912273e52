#include "wshom/dvr_linalg.hpp"

#include <algorithm>

#include "wshom/error.hpp"

namespace wshom {

std::map<int, int> ReductionResult::col_of_row() const {
    std::map<int, int> out;
    for (const Pivot& p : pivots) out[p.row] = p.col;
    return out;
}

bool ReductionResult::is_pivot_col(int c) const {
    for (const Pivot& p : pivots)
        if (p.col == c) return true;
    return false;
}

namespace {

// The elimination kernel runs on one of two working stores. Both expose
// the same surface; the dense one keeps full columns (no map churn on
// small problems), the sparse one keeps ordered maps.

class DenseStore {
public:
    explicit DenseStore(const SparseMatrix& m)
        : rows_(m.rows()), zero_(LocalElement::zero(m.field())), col_(m.cols()) {
        for (int c = 0; c < m.cols(); ++c) {
            col_[c].assign(rows_, zero_);
            for (const auto& [r, v] : m.column(c)) col_[c][r] = v;
        }
    }

    const LocalElement& get(int c, int r) const { return col_[c][r]; }

    template <class F>
    void for_each(int c, F f) const {
        for (int r = 0; r < rows_; ++r)
            if (!col_[c][r].is_zero()) f(r, col_[c][r]);
    }

    void axpy(int dst, const LocalElement& coeff, int src) {
        for (int r = 0; r < rows_; ++r)
            if (!col_[src][r].is_zero()) col_[dst][r] += coeff * col_[src][r];
    }

    void scale(int c, const LocalElement& u) {
        for (auto& v : col_[c])
            if (!v.is_zero()) v *= u;
    }

    SparseVec sparse_column(int c) const {
        SparseVec out;
        for (int r = 0; r < rows_; ++r)
            if (!col_[c][r].is_zero()) out.emplace(r, col_[c][r]);
        return out;
    }

private:
    int rows_;
    LocalElement zero_;
    std::vector<std::vector<LocalElement>> col_;
};

class SparseStore {
public:
    explicit SparseStore(const SparseMatrix& m) : zero_(LocalElement::zero(m.field())), col_(m.cols()) {
        for (int c = 0; c < m.cols(); ++c) col_[c] = m.column(c);
    }

    const LocalElement& get(int c, int r) const {
        auto it = col_[c].find(r);
        return it == col_[c].end() ? zero_ : it->second;
    }

    template <class F>
    void for_each(int c, F f) const {
        for (const auto& [r, v] : col_[c]) f(r, v);
    }

    void axpy(int dst, const LocalElement& coeff, int src) { vec_axpy(col_[dst], coeff, col_[src]); }

    void scale(int c, const LocalElement& u) {
        for (auto& [r, v] : col_[c]) v *= u;
    }

    SparseVec sparse_column(int c) const { return col_[c]; }

private:
    LocalElement zero_;
    std::vector<SparseVec> col_;
};

template <class Store>
ReductionResult reduce_impl(const SparseMatrix& m, const std::vector<int>* priority) {
    const Field f = m.field();
    const int rows = m.rows(), cols = m.cols();

    // prio[c] is the rank of column c for tie-breaking.
    std::vector<int> prio(cols);
    if (priority) {
        if (static_cast<int>(priority->size()) != cols)
            fail(errc::domain_error, "column priority is not a permutation");
        std::vector<bool> seen(cols, false);
        for (int k = 0; k < cols; ++k) {
            const int c = (*priority)[k];
            if (c < 0 || c >= cols || seen[c])
                fail(errc::domain_error, "column priority is not a permutation");
            seen[c] = true;
            prio[c] = k;
        }
    } else {
        for (int c = 0; c < cols; ++c) prio[c] = c;
    }

    Store w(m);
    SparseMatrix transform = SparseMatrix::identity(f, cols);
    std::vector<bool> col_done(cols, false);
    std::vector<Pivot> pivots;

    while (true) {
        // Globally minimal valuation among remaining columns; ties go to
        // the lowest row, then the lowest column priority. Rows already
        // pivoted carry no entries in remaining columns, so the scan
        // needs no row filter.
        int best_c = -1, best_r = -1;
        Valuation best_v = Valuation::inf();
        for (int c = 0; c < cols; ++c) {
            if (col_done[c]) continue;
            w.for_each(c, [&](int r, const LocalElement& v) {
                const Valuation val = v.valuation();
                if (best_c < 0 || val < best_v ||
                    (val == best_v && (r < best_r || (r == best_r && prio[c] < prio[best_c])))) {
                    best_c = c;
                    best_r = r;
                    best_v = val;
                }
            });
        }
        if (best_c < 0) break;

        // Normalize the pivot to exactly pi^v.
        const LocalElement pi_v = LocalElement::pi_power(f, best_v.value);
        const LocalElement unit = LocalElement::divide_exact(w.get(best_c, best_r), pi_v);
        if (!unit.is_one()) {
            const LocalElement inv = unit.inverse();
            w.scale(best_c, inv);
            transform.scale_col(best_c, inv);
        }

        // Clear the pivot row from every other remaining column. The
        // pivot has minimal valuation, so each quotient stays in R.
        for (int c = 0; c < cols; ++c) {
            if (c == best_c || col_done[c]) continue;
            const LocalElement& e = w.get(c, best_r);
            if (e.is_zero()) continue;
            const LocalElement q = -LocalElement::divide_exact(e, pi_v);
            w.axpy(c, q, best_c);
            transform.col_axpy(c, q, best_c);
        }

        pivots.push_back({best_r, best_c, best_v.value});
        col_done[best_c] = true;
    }

    ReductionResult res{SparseMatrix(f, rows, cols), std::move(transform), std::move(pivots), {}};
    for (int c = 0; c < cols; ++c) {
        SparseVec col = w.sparse_column(c);
        if (!res.is_pivot_col(c)) {
            if (!col.empty()) fail(errc::internal_error, "non-pivot column failed to reduce to zero");
            res.zero_columns.push_back(c);
        }
        res.reduced.set_column(c, std::move(col));
    }
    return res;
}

} // namespace

namespace detail {

ReductionResult reduce_columns_dense(const SparseMatrix& m, const std::vector<int>* priority) {
    return reduce_impl<DenseStore>(m, priority);
}

ReductionResult reduce_columns_sparse(const SparseMatrix& m, const std::vector<int>* priority) {
    return reduce_impl<SparseStore>(m, priority);
}

} // namespace detail

ReductionResult reduce_columns(const SparseMatrix& m, const std::vector<int>* priority) {
    if (m.rows() < 64 && m.cols() < 64) return detail::reduce_columns_dense(m, priority);
    return detail::reduce_columns_sparse(m, priority);
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    const ReductionResult red = reduce_columns(m);
    std::vector<SparseVec> out;
    out.reserve(red.zero_columns.size());
    for (int c : red.zero_columns) out.push_back(red.transform.column(c));
    return out;
}

ColumnSolver::ColumnSolver(const SparseMatrix& m) : red_(reduce_columns(m)) {}

MembershipResult ColumnSolver::solve(const SparseVec& b) const {
    MembershipResult res;
    SparseVec residual = b;
    SparseVec y;
    for (const Pivot& p : red_.pivots) {
        auto it = residual.find(p.row);
        if (it == residual.end()) continue;
        if (it->second.valuation() < Valuation::of(p.valuation)) {
            res.status = membership::not_in_ring;
            res.blocked_row = p.row;
            return res;
        }
        const LocalElement q =
            LocalElement::divide_exact(it->second, red_.reduced.entry(p.row, p.col));
        vec_axpy(residual, -q, red_.reduced.column(p.col));
        y.emplace(p.col, q);
    }
    if (!residual.empty()) {
        res.status = membership::inconsistent;
        res.blocked_row = residual.begin()->first;
        return res;
    }
    res.status = membership::solved;
    for (const auto& [c, q] : y) vec_axpy(res.x, q, red_.transform.column(c));
    return res;
}

MembershipResult solve_membership(const SparseMatrix& m, const SparseVec& b) {
    return ColumnSolver(m).solve(b);
}

SNFResult smith_normal_form(const SparseMatrix& m) {
    const Field f = m.field();
    const int rows = m.rows(), cols = m.cols();
    SparseMatrix w = m;
    SNFResult res{{}, SparseMatrix::identity(f, rows), SparseMatrix::identity(f, cols)};
    std::vector<bool> row_done(rows, false), col_done(cols, false);
    std::vector<std::pair<int, int>> spots; // (row, col) of pivot k

    while (true) {
        int best_r = -1, best_c = -1;
        Valuation best_v = Valuation::inf();
        for (int c = 0; c < cols; ++c) {
            if (col_done[c]) continue;
            for (const auto& [r, v] : w.column(c)) {
                if (row_done[r]) continue;
                const Valuation val = v.valuation();
                if (best_c < 0 || val < best_v || (val == best_v && (r < best_r || (r == best_r && c < best_c)))) {
                    best_r = r;
                    best_c = c;
                    best_v = val;
                }
            }
        }
        if (best_c < 0) break;

        const LocalElement pi_v = LocalElement::pi_power(f, best_v.value);
        const LocalElement unit = LocalElement::divide_exact(w.entry(best_r, best_c), pi_v);
        if (!unit.is_one()) {
            const LocalElement inv = unit.inverse();
            w.scale_col(best_c, inv);
            res.right.scale_col(best_c, inv);
        }
        // Row clear by column operations, then column clear by row
        // operations. After the row is cleared the row operations can
        // only touch the pivot column, so the two passes do not fight.
        for (int c = 0; c < cols; ++c) {
            if (c == best_c) continue;
            const LocalElement e = w.entry(best_r, c);
            if (e.is_zero()) continue;
            const LocalElement q = -LocalElement::divide_exact(e, pi_v);
            w.col_axpy(c, q, best_c);
            res.right.col_axpy(c, q, best_c);
        }
        for (const auto& [r, v] : SparseVec(w.column(best_c))) {
            if (r == best_r) continue;
            const LocalElement q = -LocalElement::divide_exact(v, pi_v);
            w.row_axpy(r, q, best_r);
            res.left.row_axpy(r, q, best_r);
        }
        res.exponents.push_back(best_v.value);
        spots.emplace_back(best_r, best_c);
        row_done[best_r] = true;
        col_done[best_c] = true;
    }

    // Permute pivot k to position (k, k) so left * m * right is literally
    // diagonal.
    for (int k = 0; k < static_cast<int>(spots.size()); ++k) {
        auto [r, c] = spots[k];
        if (r != k) {
            w.swap_rows(r, k);
            res.left.swap_rows(r, k);
            for (auto& s : spots)
                if (s.first == k) s.first = r;
            spots[k].first = k;
        }
        if (c != k) {
            w.swap_columns(c, k);
            res.right.swap_columns(c, k);
            for (auto& s : spots)
                if (s.second == k) s.second = c;
            spots[k].second = k;
        }
    }
    for (size_t k = 1; k < res.exponents.size(); ++k)
        if (res.exponents[k] < res.exponents[k - 1])
            fail(errc::internal_error, "invariant factors out of order");
    return res;
}

// ---- integer Smith normal form --------------------------------------------

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols != o.rows) fail(errc::internal_error, "integer matrix product shape mismatch");
    IntMatrix out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < o.cols; ++j) out.a[i][j] += a[i][k] * o.a[k][j];
        }
    return out;
}

IntSNFResult integer_snf(IntMatrix m) {
    const int rows = m.rows, cols = m.cols;
    IntSNFResult res{{}, IntMatrix::identity(rows), IntMatrix::identity(cols)};

    auto row_sub = [&](int dst, const mpz_class& q, int src) {
        for (int j = 0; j < cols; ++j) m.a[dst][j] -= q * m.a[src][j];
        for (int j = 0; j < rows; ++j) res.left.a[dst][j] -= q * res.left.a[src][j];
    };
    auto col_sub = [&](int dst, const mpz_class& q, int src) {
        for (int i = 0; i < rows; ++i) m.a[i][dst] -= q * m.a[i][src];
        for (int i = 0; i < cols; ++i) res.right.a[i][dst] -= q * res.right.a[i][src];
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        m.a[a].swap(m.a[b]);
        res.left.a[a].swap(res.left.a[b]);
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(m.a[i][a], m.a[i][b]);
        for (int i = 0; i < cols; ++i) std::swap(res.right.a[i][a], res.right.a[i][b]);
    };
    auto row_negate = [&](int r) {
        for (int j = 0; j < cols; ++j) m.a[r][j] = -m.a[r][j];
        for (int j = 0; j < rows; ++j) res.left.a[r][j] = -res.left.a[r][j];
    };

    const int bound = std::min(rows, cols);
    for (int k = 0; k < bound; ++k) {
        // Smallest |entry| in the active submatrix becomes the pivot.
        int pi = -1, pj = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                if (m.a[i][j] == 0) continue;
                if (pi < 0 || mpz_cmpabs(m.a[i][j].get_mpz_t(), m.a[pi][pj].get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        row_swap(k, pi);
        col_swap(k, pj);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = k + 1; i < rows; ++i) {
                if (m.a[i][k] == 0) continue;
                mpz_class q = m.a[i][k] / m.a[k][k]; // truncated
                row_sub(i, q, k);
                if (m.a[i][k] != 0) { // remainder becomes the new, smaller pivot
                    row_swap(i, k);
                    settled = false;
                }
            }
            if (!settled) continue;
            for (int j = k + 1; j < cols; ++j) {
                if (m.a[k][j] == 0) continue;
                mpz_class q = m.a[k][j] / m.a[k][k];
                col_sub(j, q, k);
                if (m.a[k][j] != 0) {
                    col_swap(j, k);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Pivot must divide the rest of the submatrix for the
            // divisibility chain; fold an offending row in and retry.
            for (int i = k + 1; i < rows && settled; ++i)
                for (int j = k + 1; j < cols && settled; ++j)
                    if (m.a[i][j] % m.a[k][k] != 0) {
                        row_sub(k, -1, i); // row_k += row_i
                        settled = false;
                    }
        }
        if (m.a[k][k] < 0) row_negate(k);
        res.factors.push_back(m.a[k][k]);
    }
    for (size_t i = 1; i < res.factors.size(); ++i)
        if (res.factors[i] % res.factors[i - 1] != 0)
            fail(errc::internal_error, "integer invariant factors do not divide in order");
    return res;
}

} // namespace wshom
