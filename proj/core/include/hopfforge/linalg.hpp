#pragma once

#include <vector>

#include "hopfforge/field.hpp"

namespace hopfforge {

// Dense row-major matrix over GF(p^k); the context travels separately.
struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<Fq> a;

    Matrix() = default;
    Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Fq{0}) {}
    Fq& at(size_t r, size_t c) { return a[r * cols + c]; }
    Fq at(size_t r, size_t c) const { return a[r * cols + c]; }
    static Matrix identity(size_t n);
    bool operator==(const Matrix&) const = default;
};

Matrix mat_mul(const FieldCtx& F, const Matrix& A, const Matrix& B);
size_t mat_rank(const FieldCtx& F, Matrix A);

// Sorted sparse column vector: (row index, nonzero coefficient).
using SparseVec = std::vector<std::pair<uint32_t, Fq>>;

SparseVec sparse_axpy(const FieldCtx& F, const SparseVec& x, Fq c, const SparseVec& y);

// Incremental column echelon form. Feeds columns one by one; rank() and, when
// tracking is on, a kernel basis in input-column coordinates.
class ColumnEchelon {
  public:
    ColumnEchelon(const FieldCtx& F, bool track_kernel) : F_(&F), track_(track_kernel) {}

    // Returns true when the column was independent of the previous ones.
    bool add_column(SparseVec col);
    size_t rank() const { return pivots_.size(); }
    const std::vector<std::vector<Fq>>& kernel() const { return kernel_; }
    size_t columns_seen() const { return seen_; }

  private:
    const FieldCtx* F_;
    bool track_;
    size_t seen_ = 0;
    std::vector<std::pair<uint32_t, size_t>> pivots_;  // (pivot row, store index), sorted by row
    std::vector<SparseVec> store_;
    std::vector<std::vector<Fq>> combos_;  // combination over input columns, per stored column
    std::vector<std::vector<Fq>> kernel_;
};

}  // namespace hopfforge
