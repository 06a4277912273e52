#include "wshom/chain_maps.hpp"

#include <sstream>

#include "wshom/error.hpp"

namespace wshom {

namespace {

void check_assignment_shape(const WeightedComplex& x, const WeightAssignment& w) {
    if (static_cast<int>(w.size()) != x.dim() + 1)
        fail(errc::domain_error, "weight assignment has wrong number of dimensions");
    for (int d = 0; d <= x.dim(); ++d)
        if (static_cast<int>(w[d].size()) != x.size(d))
            fail(errc::domain_error, "weight assignment has wrong size at dimension " + std::to_string(d));
}

} // namespace

SparseMatrix weighted_boundary(const WeightedComplex& x, const WeightAssignment& w, int n) {
    if (n < 0) fail(errc::domain_error, "boundary degree must be non-negative");
    check_assignment_shape(x, w);
    const int rows = n >= 1 ? x.size(n - 1) : 0;
    const int cols = x.size(n);
    SparseMatrix m(x.field(), rows, cols);
    if (n == 0 || cols == 0) return m;
    for (int c = 0; c < cols; ++c) {
        const Simplex& s = x.simplex(n, c);
        const int ws = w[n][c];
        for (int i = 0; i <= s.dim(); ++i) {
            const Simplex f = s.facet(i);
            const auto r = x.find(f);
            if (!r) fail(errc::internal_error, "complex is not face-closed");
            const int wf = w[n - 1][*r];
            if (wf < ws) fail(errc::domain_error, "weights are not monotone on " + f.label(x.names()));
            LocalElement e = LocalElement::pi_power(x.field(), static_cast<unsigned>(wf - ws));
            if (i % 2 == 1) e = -e;
            m.set(*r, c, std::move(e));
        }
    }
    return m;
}

SparseMatrix weighted_boundary(const WeightedComplex& x, int n) {
    return weighted_boundary(x, x.weights(), n);
}

SparseMatrix theta_matrix(const WeightedComplex& x, const WeightAssignment& w_from,
                          const WeightAssignment& w_to, int n) {
    check_assignment_shape(x, w_from);
    check_assignment_shape(x, w_to);
    const int cols = x.size(n);
    SparseMatrix m(x.field(), cols, cols);
    for (int i = 0; i < cols; ++i) {
        const int diff = (n <= x.dim() ? w_to[n][i] : 0) - (n <= x.dim() ? w_from[n][i] : 0);
        if (diff < 0)
            fail(errc::domain_error, "comparison map leaves the ring on " + x.label(n, i) +
                                         " (weight ratio pi^" + std::to_string(diff) + ")");
        m.set(i, i, LocalElement::pi_power(x.field(), static_cast<unsigned>(diff)));
    }
    return m;
}

SparseMatrix theta_matrix(const WeightedComplex& x, const WeightAssignment& w_from, int n) {
    return theta_matrix(x, w_from, x.weights(), n);
}

bool check_chain_complex(const WeightedComplex& x, const WeightAssignment& w) {
    for (int n = 1; n <= x.dim(); ++n) {
        const SparseMatrix lower = weighted_boundary(x, w, n);
        const SparseMatrix upper = weighted_boundary(x, w, n + 1);
        if (n + 1 <= x.dim() && !(lower * upper).is_zero()) return false;
    }
    return true;
}

bool check_chain_complex(const WeightedComplex& x) {
    return check_chain_complex(x, x.weights());
}

bool check_naturality(const WeightedComplex& x, const WeightAssignment& w_from) {
    for (int n = 0; n <= x.dim(); ++n) {
        const SparseMatrix lhs =
            n >= 1 ? theta_matrix(x, w_from, n - 1) * weighted_boundary(x, w_from, n)
                   : weighted_boundary(x, w_from, 0);
        const SparseMatrix rhs = weighted_boundary(x, n) * theta_matrix(x, w_from, n);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

std::string dump_matrix(const WeightedComplex& x, const SparseMatrix& m, int row_dim, int col_dim) {
    std::ostringstream out;
    for (int c = 0; c < m.cols(); ++c) {
        for (const auto& [r, v] : m.column(c))
            out << x.label(row_dim, r) << " " << x.label(col_dim, c) << " " << v.to_string() << "\n";
    }
    return out.str();
}

} // namespace wshom
