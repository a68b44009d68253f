#include "csr_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace ams {

CsrMatrix CsrMatrix::from_triplets(Index n_rows, Index n_cols, std::vector<Triplet> triplets) {
    if (n_rows < 0 || n_cols < 0)
        throw Error(ErrorCode::invalid_argument, "negative matrix dimension");
    for (const auto& t : triplets) {
        if (t.row < 0 || t.row >= n_rows || t.col < 0 || t.col >= n_cols)
            throw Error(ErrorCode::invalid_argument, "triplet index out of range");
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    CsrMatrix m;
    m.n_rows_ = n_rows;
    m.n_cols_ = n_cols;
    m.row_offsets_.assign(static_cast<std::size_t>(n_rows) + 1, 0);
    m.col_indices_.reserve(triplets.size());
    m.values_.reserve(triplets.size());

    std::size_t k = 0;
    for (Index i = 0; i < n_rows; ++i) {
        while (k < triplets.size() && triplets[k].row == i) {
            Index c = triplets[k].col;
            Real v = triplets[k].value;
            ++k;
            while (k < triplets.size() && triplets[k].row == i && triplets[k].col == c) {
                v += triplets[k].value;  // duplicates summed
                ++k;
            }
            m.col_indices_.push_back(c);
            m.values_.push_back(v);
        }
        m.row_offsets_[static_cast<std::size_t>(i) + 1] = static_cast<Index>(m.values_.size());
    }
    m.validate();
    return m;
}

CsrMatrix CsrMatrix::from_csr(Index n_rows, Index n_cols, std::vector<Index> row_offsets,
                              std::vector<Index> col_indices, std::vector<Real> values) {
    CsrMatrix m;
    m.n_rows_ = n_rows;
    m.n_cols_ = n_cols;
    m.row_offsets_ = std::move(row_offsets);
    m.col_indices_ = std::move(col_indices);
    m.values_ = std::move(values);
    m.validate();
    return m;
}

CsrMatrix CsrMatrix::from_dense(const DenseMatrix& a) {
    std::vector<Triplet> t;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0.0) t.push_back({i, j, a(i, j)});
    return from_triplets(a.rows(), a.cols(), std::move(t));
}

CsrMatrix CsrMatrix::identity(Index n) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) t.push_back({i, i, 1.0});
    CsrMatrix m = from_triplets(n, n, std::move(t));
    m.symmetric_ = true;
    return m;
}

void CsrMatrix::validate() const {
    if (row_offsets_.size() != static_cast<std::size_t>(n_rows_) + 1)
        throw Error(ErrorCode::structure, "row offset array has wrong length");
    if (row_offsets_.front() != 0)
        throw Error(ErrorCode::structure, "row offsets must start at zero");
    if (row_offsets_.back() != static_cast<Index>(values_.size()) ||
        col_indices_.size() != values_.size())
        throw Error(ErrorCode::structure, "row offsets inconsistent with stored entries");
    for (Index i = 0; i < n_rows_; ++i) {
        if (row_offsets_[i] > row_offsets_[i + 1])
            throw Error(ErrorCode::structure, "row offsets must be non-decreasing");
        for (Index k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
            if (col_indices_[k] < 0 || col_indices_[k] >= n_cols_)
                throw Error(ErrorCode::structure, "column index out of range");
            if (k > row_offsets_[i] && col_indices_[k] <= col_indices_[k - 1])
                throw Error(ErrorCode::structure, "column indices must be strictly increasing");
        }
    }
}

Real CsrMatrix::value_at(Index i, Index j) const {
    if (i < 0 || i >= n_rows_ || j < 0 || j >= n_cols_)
        throw Error(ErrorCode::invalid_argument, "index out of range");
    auto begin = col_indices_.begin() + row_offsets_[i];
    auto end = col_indices_.begin() + row_offsets_[i + 1];
    auto it = std::lower_bound(begin, end, j);
    if (it == end || *it != j) return 0.0;
    return values_[static_cast<std::size_t>(it - col_indices_.begin())];
}

Real CsrMatrix::max_abs() const {
    Real m = 0.0;
    for (Real v : values_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<Real> CsrMatrix::diagonal() const {
    Index n = std::min(n_rows_, n_cols_);
    std::vector<Real> d(static_cast<std::size_t>(n), 0.0);
    for (Index i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = value_at(i, i);
    return d;
}

void CsrMatrix::multiply(ConstVectorView x, VectorView y) const {
    if (static_cast<Index>(x.size()) != n_cols_ || static_cast<Index>(y.size()) != n_rows_)
        throw Error(ErrorCode::dimension_mismatch, "spmv dimension mismatch");
    for (Index i = 0; i < n_rows_; ++i) {
        Real s = 0.0;
        for (Index k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k)
            s += values_[k] * x[static_cast<std::size_t>(col_indices_[k])];
        y[static_cast<std::size_t>(i)] = s;
    }
}

std::vector<Real> CsrMatrix::multiply(ConstVectorView x) const {
    std::vector<Real> y(static_cast<std::size_t>(n_rows_), 0.0);
    multiply(x, VectorView(y));
    return y;
}

void CsrMatrix::multiply_transpose(ConstVectorView x, VectorView y) const {
    if (static_cast<Index>(x.size()) != n_rows_ || static_cast<Index>(y.size()) != n_cols_)
        throw Error(ErrorCode::dimension_mismatch, "transpose spmv dimension mismatch");
    std::fill(y.begin(), y.end(), 0.0);
    for (Index i = 0; i < n_rows_; ++i) {
        const Real xi = x[static_cast<std::size_t>(i)];
        if (xi == 0.0) continue;
        for (Index k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k)
            y[static_cast<std::size_t>(col_indices_[k])] += values_[k] * xi;
    }
}

std::vector<Real> CsrMatrix::multiply_transpose(ConstVectorView x) const {
    std::vector<Real> y(static_cast<std::size_t>(n_cols_), 0.0);
    multiply_transpose(x, VectorView(y));
    return y;
}

namespace {

void check_index_set(std::span<const Index> set, Index bound, const char* what) {
    for (Index v : set)
        if (v < 0 || v >= bound)
            throw Error(ErrorCode::invalid_argument, std::string(what) + " index out of range");
}

}  // namespace

DenseMatrix CsrMatrix::extract_dense(std::span<const Index> rows,
                                     std::span<const Index> cols) const {
    check_index_set(rows, n_rows_, "row");
    check_index_set(cols, n_cols_, "column");
    // Position map: global column -> output column, -1 when absent.
    std::vector<Index> pos(static_cast<std::size_t>(n_cols_), -1);
    for (std::size_t q = 0; q < cols.size(); ++q) pos[static_cast<std::size_t>(cols[q])] = static_cast<Index>(q);

    DenseMatrix out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t p = 0; p < rows.size(); ++p) {
        Index i = rows[p];
        for (Index k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
            Index q = pos[static_cast<std::size_t>(col_indices_[k])];
            if (q >= 0) out(static_cast<Index>(p), q) = values_[k];
        }
    }
    return out;
}

CsrMatrix CsrMatrix::extract_csr(std::span<const Index> rows, std::span<const Index> cols) const {
    check_index_set(rows, n_rows_, "row");
    check_index_set(cols, n_cols_, "column");
    std::vector<Index> pos(static_cast<std::size_t>(n_cols_), -1);
    for (std::size_t q = 0; q < cols.size(); ++q) pos[static_cast<std::size_t>(cols[q])] = static_cast<Index>(q);

    std::vector<Triplet> t;
    for (std::size_t p = 0; p < rows.size(); ++p) {
        Index i = rows[p];
        for (Index k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
            Index q = pos[static_cast<std::size_t>(col_indices_[k])];
            if (q >= 0) t.push_back({static_cast<Index>(p), q, values_[k]});
        }
    }
    return from_triplets(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()),
                         std::move(t));
}

bool CsrMatrix::is_symmetric(Real tol_scale) const {
    if (n_rows_ != n_cols_) return false;
    const Real tol = tol_scale * max_abs();
    for (Index i = 0; i < n_rows_; ++i) {
        for (Index k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
            Index j = col_indices_[k];
            if (j == i) continue;
            auto begin = col_indices_.begin() + row_offsets_[j];
            auto end = col_indices_.begin() + row_offsets_[j + 1];
            auto it = std::lower_bound(begin, end, i);
            if (it == end || *it != i) return false;  // structurally asymmetric
            Real vji = values_[static_cast<std::size_t>(it - col_indices_.begin())];
            if (std::abs(values_[k] - vji) > tol) return false;
        }
    }
    return true;
}

}  // namespace ams
