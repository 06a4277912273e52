#include "wshom/sparse_matrix.hpp"

#include "wshom/error.hpp"

namespace wshom {

void vec_axpy(SparseVec& dst, const LocalElement& coeff, const SparseVec& src) {
    if (coeff.is_zero()) return;
    for (const auto& [r, v] : src) {
        auto it = dst.find(r);
        if (it == dst.end()) {
            dst.emplace(r, coeff * v);
        } else {
            it->second += coeff * v;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

SparseMatrix SparseMatrix::identity(Field f, int n) {
    SparseMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, LocalElement::one(f));
    return m;
}

int SparseMatrix::nnz() const {
    int n = 0;
    for (const auto& col : data_) n += static_cast<int>(col.size());
    return n;
}

LocalElement SparseMatrix::entry(int r, int c) const {
    auto it = data_[c].find(r);
    return it == data_[c].end() ? LocalElement::zero(f_) : it->second;
}

void SparseMatrix::set(int r, int c, LocalElement v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) fail(errc::internal_error, "matrix index out of range");
    if (v.is_zero())
        data_[c].erase(r);
    else
        data_[c].insert_or_assign(r, std::move(v));
}

void SparseMatrix::add_to(int r, int c, const LocalElement& v) {
    if (v.is_zero()) return;
    auto it = data_[c].find(r);
    if (it == data_[c].end()) {
        data_[c].emplace(r, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) data_[c].erase(it);
    }
}

void SparseMatrix::scale_col(int c, const LocalElement& u) {
    if (u.is_zero()) {
        data_[c].clear();
        return;
    }
    for (auto& [r, v] : data_[c]) v *= u;
}

void SparseMatrix::row_axpy(int dst, const LocalElement& coeff, int src) {
    if (coeff.is_zero()) return;
    for (int c = 0; c < cols_; ++c) {
        auto it = data_[c].find(src);
        if (it != data_[c].end()) add_to(dst, c, coeff * it->second);
    }
}

void SparseMatrix::scale_row(int r, const LocalElement& u) {
    for (int c = 0; c < cols_; ++c) {
        auto it = data_[c].find(r);
        if (it == data_[c].end()) continue;
        if (u.is_zero()) {
            data_[c].erase(it);
        } else {
            it->second *= u;
        }
    }
}

void SparseMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) {
        auto ia = data_[c].find(a), ib = data_[c].find(b);
        const bool ha = ia != data_[c].end(), hb = ib != data_[c].end();
        if (!ha && !hb) continue;
        if (ha && hb) {
            std::swap(ia->second, ib->second);
        } else if (ha) {
            LocalElement v = std::move(ia->second);
            data_[c].erase(ia);
            data_[c].emplace(b, std::move(v));
        } else {
            LocalElement v = std::move(ib->second);
            data_[c].erase(ib);
            data_[c].emplace(a, std::move(v));
        }
    }
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) fail(errc::internal_error, "matrix product shape mismatch");
    SparseMatrix out(f_, rows_, o.cols_);
    for (int c = 0; c < o.cols_; ++c) {
        SparseVec acc;
        for (const auto& [k, v] : o.data_[c]) vec_axpy(acc, v, data_[k]);
        out.data_[c] = std::move(acc);
    }
    return out;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [k, x] : v) vec_axpy(out, x, data_[k]);
    return out;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix out(f_, cols_, rows_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : data_[c]) out.data_[r].emplace(c, v);
    return out;
}

SparseMatrix SparseMatrix::select_columns(const std::vector<int>& cols) const {
    SparseMatrix out(f_, rows_, static_cast<int>(cols.size()));
    for (size_t i = 0; i < cols.size(); ++i) out.data_[i] = data_[cols[i]];
    return out;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<int>& rows) const {
    std::map<int, int> pos;
    for (size_t i = 0; i < rows.size(); ++i) pos[rows[i]] = static_cast<int>(i);
    SparseMatrix out(f_, static_cast<int>(rows.size()), cols_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : data_[c]) {
            auto it = pos.find(r);
            if (it != pos.end()) out.data_[c].emplace(it->second, v);
        }
    return out;
}

SparseMatrix SparseMatrix::augmented(const SparseMatrix& right) const {
    if (rows_ != right.rows_) fail(errc::internal_error, "augmented matrix shape mismatch");
    SparseMatrix out(f_, rows_, cols_ + right.cols_);
    for (int c = 0; c < cols_; ++c) out.data_[c] = data_[c];
    for (int c = 0; c < right.cols_; ++c) out.data_[cols_ + c] = right.data_[c];
    return out;
}

} // namespace wshom
