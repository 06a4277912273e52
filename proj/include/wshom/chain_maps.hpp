#pragma once

#include <string>

#include "wshom/sparse_matrix.hpp"
#include "wshom/weighted_complex.hpp"

namespace wshom {

// Weighted boundary matrix of degree n: rows are the (n-1)-simplices and
// columns the n-simplices, both in canonical order. The column of an
// n-simplex s holds, at facet i, the entry (-1)^i * pi^(w(facet) - w(s)).
// Weight monotonicity makes every exponent non-negative. Degree 0 gives
// a 0 x |vertices| matrix (the chain group below the vertices is zero);
// degrees above the dimension give empty matrices.
SparseMatrix weighted_boundary(const WeightedComplex& x, int n);

// Same with an explicit weight assignment instead of the complex's own.
SparseMatrix weighted_boundary(const WeightedComplex& x, const WeightAssignment& w, int n);

// Diagonal comparison map in degree n between the weight assignments
// w_from <= w (pointwise exponents): the n-simplex s maps to
// pi^(w(s) - w_from(s)) * s. errc::domain_error when some ratio would
// leave the ring.
SparseMatrix theta_matrix(const WeightedComplex& x, const WeightAssignment& w_from, int n);
SparseMatrix theta_matrix(const WeightedComplex& x, const WeightAssignment& w_from,
                          const WeightAssignment& w_to, int n);

// boundary(n) o boundary(n+1) == 0 for every degree.
bool check_chain_complex(const WeightedComplex& x);
bool check_chain_complex(const WeightedComplex& x, const WeightAssignment& w);

// Naturality of the comparison maps: in every degree n,
// theta(n-1) o boundary_{w_from}(n) == boundary_w(n) o theta(n).
bool check_naturality(const WeightedComplex& x, const WeightAssignment& w_from);

// One line per nonzero entry, "row-simplex col-simplex coefficient",
// column-major. Rows live in dimension row_dim; columns in row_dim + 1
// for boundary matrices or row_dim for diagonal ones.
std::string dump_matrix(const WeightedComplex& x, const SparseMatrix& m, int row_dim, int col_dim);

} // namespace wshom
