#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "wshom/sparse_matrix.hpp"

namespace wshom {

// Over the local ring, divisibility is a valuation comparison, so the
// entry of globally minimal valuation divides every other entry. The
// reductions below exploit this: pivots are chosen by minimal valuation
// (ties broken by lowest row index, then lowest column priority), every
// quotient is exact, and pivot valuations come out non-decreasing. With
// this pivot rule the pivot valuations of a plain column reduction are
// already the invariant factors of the matrix.

struct Pivot {
    int row;
    int col;
    unsigned valuation;
};

struct ReductionResult {
    SparseMatrix reduced;   // input * transform; pivot columns have unit-normalized pivots
    SparseMatrix transform; // cols x cols column-operation record, unit determinant
    std::vector<Pivot> pivots;     // in creation order; valuations non-decreasing
    std::vector<int> zero_columns; // ascending; complement of the pivot columns

    std::map<int, int> col_of_row() const; // pivot row -> pivot column
    bool is_pivot_col(int c) const;
};

// Column reduction by unimodular column operations only. Every non-pivot
// column is reduced to zero; pivot columns have pairwise distinct pivot
// rows and are mutually unreduced (echelon up to row permutation). The
// optional priority permutes which columns win ties: priority[k] = c
// means column c is examined with rank k. Matrices smaller than 64x64
// are reduced on a dense working copy, larger ones on the sparse one;
// both paths produce identical results.
ReductionResult reduce_columns(const SparseMatrix& m, const std::vector<int>* priority = nullptr);

namespace detail {
ReductionResult reduce_columns_dense(const SparseMatrix& m, const std::vector<int>* priority = nullptr);
ReductionResult reduce_columns_sparse(const SparseMatrix& m, const std::vector<int>* priority = nullptr);
} // namespace detail

struct SNFResult {
    std::vector<unsigned> exponents; // invariant factor exponents, non-decreasing
    SparseMatrix left;               // row transform U
    SparseMatrix right;              // column transform V
    int rank() const { return static_cast<int>(exponents.size()); }
};

// Diagonalization U * M * V = diag(pi^e1, ..., pi^er, 0, ...) with unit
// transforms and e1 <= e2 <= ... (divisibility chain).
SNFResult smith_normal_form(const SparseMatrix& m);

// Basis of {x : M x = 0} as an R-module; the vectors are the transform
// columns over the zero columns of the reduction, which are automatically
// primitive (coefficient gcd a unit).
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

enum class membership { solved, not_in_ring, inconsistent };

struct MembershipResult {
    membership status = membership::inconsistent;
    SparseVec x;          // a solution of M x = b when status == solved
    int blocked_row = -1; // the row whose division failed (not_in_ring) or could not be reached
};

// Factors M once; solves M x = b over the ring repeatedly. not_in_ring
// means a solution exists over the fraction field but needs negative
// valuations; inconsistent means no solution at all.
class ColumnSolver {
public:
    explicit ColumnSolver(const SparseMatrix& m);
    MembershipResult solve(const SparseVec& b) const;
    const ReductionResult& reduction() const { return red_; }

private:
    ReductionResult red_;
};

MembershipResult solve_membership(const SparseMatrix& m, const SparseVec& b);

// ---- integer lane (classical homology) -----------------------------------

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<mpz_class>> a; // dense, row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(r, std::vector<mpz_class>(c)) {}
    static IntMatrix identity(int n);
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct IntSNFResult {
    std::vector<mpz_class> factors; // nonzero diagonal, d1 | d2 | ..., all positive
    IntMatrix left, right;          // left * M * right = diag(factors, 0...)
    int rank() const { return static_cast<int>(factors.size()); }
};

// Smith normal form over the integers, minimal-pivot flavor: repeatedly
// move the smallest nonzero entry to the pivot, reduce its row and
// column by division with remainder, then patch divisibility failures.
IntSNFResult integer_snf(IntMatrix m);

} // namespace wshom
