#pragma once

#include <string>
#include <vector>

#include "dense_matrix.hpp"
#include "types.hpp"

namespace ams {

struct Triplet {
    Index row;
    Index col;
    Real value;
};

/// Sparse matrix in compressed-sparse-row form. Immutable after construction.
///
/// Invariants (validated on construction): row offsets are non-decreasing
/// with row_offsets[0] == 0 and row_offsets[n_rows] == nnz; column indices
/// are strictly increasing within each row.
class CsrMatrix {
public:
    CsrMatrix() = default;

    /// Builds from unordered triplets; duplicates are summed, entries sorted.
    /// Explicit zeros are kept in the pattern.
    static CsrMatrix from_triplets(Index n_rows, Index n_cols, std::vector<Triplet> triplets);

    static CsrMatrix from_csr(Index n_rows, Index n_cols, std::vector<Index> row_offsets,
                              std::vector<Index> col_indices, std::vector<Real> values);

    /// Dense-to-sparse conversion keeping every nonzero entry.
    static CsrMatrix from_dense(const DenseMatrix& a);

    static CsrMatrix identity(Index n);

    Index n_rows() const noexcept { return n_rows_; }
    Index n_cols() const noexcept { return n_cols_; }
    Index nnz() const noexcept { return static_cast<Index>(values_.size()); }

    const std::vector<Index>& row_offsets() const noexcept { return row_offsets_; }
    const std::vector<Index>& col_indices() const noexcept { return col_indices_; }
    const std::vector<Real>& values() const noexcept { return values_; }

    bool symmetric() const noexcept { return symmetric_; }
    void set_symmetric(bool flag) { symmetric_ = flag; }

    /// Stored value at (i, j), zero when the entry is not in the pattern.
    Real value_at(Index i, Index j) const;

    Real max_abs() const;
    std::vector<Real> diagonal() const;

    /// y = A x
    std::vector<Real> multiply(ConstVectorView x) const;
    void multiply(ConstVectorView x, VectorView y) const;
    /// y = A^T x
    std::vector<Real> multiply_transpose(ConstVectorView x) const;
    void multiply_transpose(ConstVectorView x, VectorView y) const;

    /// Entry (p, q) of the result equals A(rows[p], cols[q]); the order of the
    /// supplied index sets is preserved. Indices must be in range and
    /// duplicate-free.
    DenseMatrix extract_dense(std::span<const Index> rows, std::span<const Index> cols) const;
    CsrMatrix extract_csr(std::span<const Index> rows, std::span<const Index> cols) const;

    /// Numeric + structural symmetry test: every stored (i,j) has a stored
    /// (j,i) with |a_ij - a_ji| <= tol_scale * max|a|.
    bool is_symmetric(Real tol_scale = 1e-12) const;

private:
    void validate() const;

    Index n_rows_ = 0;
    Index n_cols_ = 0;
    std::vector<Index> row_offsets_{0};
    std::vector<Index> col_indices_;
    std::vector<Real> values_;
    bool symmetric_ = false;
};

}  // namespace ams
