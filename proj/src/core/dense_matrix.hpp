#pragma once

#include <cmath>
#include <vector>

#include "errors.hpp"
#include "types.hpp"

namespace ams {

/// Dense matrix with column-major storage (LAPACK layout).
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(Index n_rows, Index n_cols)
        : n_rows_(n_rows),
          n_cols_(n_cols),
          values_(static_cast<std::size_t>(n_rows * n_cols), 0.0) {
        if (n_rows < 0 || n_cols < 0)
            throw Error(ErrorCode::invalid_argument, "negative matrix dimension");
    }

    static DenseMatrix identity(Index n) {
        DenseMatrix m(n, n);
        for (Index i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    Index rows() const noexcept { return n_rows_; }
    Index cols() const noexcept { return n_cols_; }
    bool empty() const noexcept { return values_.empty(); }

    Real& operator()(Index i, Index j) noexcept {
        return values_[static_cast<std::size_t>(j * n_rows_ + i)];
    }
    Real operator()(Index i, Index j) const noexcept {
        return values_[static_cast<std::size_t>(j * n_rows_ + i)];
    }

    Real* data() noexcept { return values_.data(); }
    const Real* data() const noexcept { return values_.data(); }

    Real* col(Index j) noexcept { return values_.data() + j * n_rows_; }
    const Real* col(Index j) const noexcept { return values_.data() + j * n_rows_; }

    DenseMatrix transposed() const {
        DenseMatrix t(n_cols_, n_rows_);
        for (Index j = 0; j < n_cols_; ++j)
            for (Index i = 0; i < n_rows_; ++i) t(j, i) = (*this)(i, j);
        return t;
    }

    Real max_abs() const {
        Real m = 0.0;
        for (Real v : values_) m = std::max(m, std::abs(v));
        return m;
    }

    Real frobenius_norm() const {
        Real s = 0.0;
        for (Real v : values_) s += v * v;
        return std::sqrt(s);
    }

    /// Largest |a_ij - a_ji|; only meaningful for square matrices.
    Real max_asymmetry() const {
        Real m = 0.0;
        for (Index j = 0; j < n_cols_; ++j)
            for (Index i = j + 1; i < n_rows_; ++i)
                m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

    void symmetrize() {
        for (Index j = 0; j < n_cols_; ++j)
            for (Index i = j + 1; i < n_rows_; ++i) {
                Real v = 0.5 * ((*this)(i, j) + (*this)(j, i));
                (*this)(i, j) = v;
                (*this)(j, i) = v;
            }
    }

    void add_to_diagonal(Real shift) {
        for (Index i = 0; i < std::min(n_rows_, n_cols_); ++i) (*this)(i, i) += shift;
    }

    /// y = A x
    std::vector<Real> multiply(ConstVectorView x) const {
        if (static_cast<Index>(x.size()) != n_cols_)
            throw Error(ErrorCode::dimension_mismatch, "dense matvec dimension mismatch");
        std::vector<Real> y(static_cast<std::size_t>(n_rows_), 0.0);
        for (Index j = 0; j < n_cols_; ++j) {
            const Real xj = x[static_cast<std::size_t>(j)];
            const Real* cj = col(j);
            for (Index i = 0; i < n_rows_; ++i) y[static_cast<std::size_t>(i)] += cj[i] * xj;
        }
        return y;
    }

    /// y = A^T x
    std::vector<Real> multiply_transpose(ConstVectorView x) const {
        if (static_cast<Index>(x.size()) != n_rows_)
            throw Error(ErrorCode::dimension_mismatch, "dense matvec dimension mismatch");
        std::vector<Real> y(static_cast<std::size_t>(n_cols_), 0.0);
        for (Index j = 0; j < n_cols_; ++j) {
            const Real* cj = col(j);
            Real s = 0.0;
            for (Index i = 0; i < n_rows_; ++i) s += cj[i] * x[static_cast<std::size_t>(i)];
            y[static_cast<std::size_t>(j)] = s;
        }
        return y;
    }

private:
    Index n_rows_ = 0;
    Index n_cols_ = 0;
    std::vector<Real> values_;
};

}  // namespace ams
