#pragma once

#include <map>
#include <vector>

#include "wshom/local_element.hpp"

namespace wshom {

// Sparse vector: row index -> nonzero value.
using SparseVec = std::map<int, LocalElement>;

void vec_axpy(SparseVec& dst, const LocalElement& coeff, const SparseVec& src);

// Column-major sparse matrix over the local ring. Zero entries are never
// stored; mutating helpers erase entries that cancel to zero.
class SparseMatrix {
public:
    SparseMatrix(Field f, int rows, int cols) : f_(f), rows_(rows), cols_(cols), data_(cols) {}
    static SparseMatrix identity(Field f, int n);

    const Field& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nnz() const;
    bool is_zero() const { return nnz() == 0; }

    LocalElement entry(int r, int c) const;
    void set(int r, int c, LocalElement v);
    void add_to(int r, int c, const LocalElement& v);

    const SparseVec& column(int c) const { return data_[c]; }
    void set_column(int c, SparseVec col) { data_[c] = std::move(col); }
    void swap_columns(int a, int b) { data_[a].swap(data_[b]); }

    // col_dst += coeff * col_src
    void col_axpy(int dst, const LocalElement& coeff, int src) { vec_axpy(data_[dst], coeff, data_[src]); }
    void scale_col(int c, const LocalElement& u);
    // row_dst += coeff * row_src; scans every column
    void row_axpy(int dst, const LocalElement& coeff, int src);
    void scale_row(int r, const LocalElement& u);
    void swap_rows(int a, int b);

    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseVec apply(const SparseVec& v) const; // matrix * vector
    SparseMatrix transposed() const;

    SparseMatrix select_columns(const std::vector<int>& cols) const;
    SparseMatrix select_rows(const std::vector<int>& rows) const;

    // Stack [*this | right] side by side.
    SparseMatrix augmented(const SparseMatrix& right) const;

    bool operator==(const SparseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    Field f_;
    int rows_, cols_;
    std::vector<SparseVec> data_;
};

} // namespace wshom
