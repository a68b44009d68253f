#include "lapack.hpp"

#include <cblas.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace ams {

namespace {

lapack_int checked_int(Index n, const char* what) {
    if (n > std::numeric_limits<lapack_int>::max())
        throw Error(ErrorCode::unsupported, std::string(what) + ": dimension too large for LAPACK");
    return static_cast<lapack_int>(n);
}

}  // namespace

SvdFactors svd_economic(const DenseMatrix& x) {
    const Index m = x.rows(), n = x.cols();
    if (m == 0 || n == 0) throw Error(ErrorCode::invalid_argument, "svd of empty matrix");
    const Index k = std::min(m, n);

    DenseMatrix a = x;  // dgesdd destroys its input
    SvdFactors f;
    f.u = DenseMatrix(m, k);
    f.v = DenseMatrix(n, k);
    f.sigma.assign(static_cast<std::size_t>(k), 0.0);
    DenseMatrix vt(k, n);

    lapack_int info = LAPACKE_dgesdd(
        LAPACK_COL_MAJOR, 'S', checked_int(m, "svd"), checked_int(n, "svd"), a.data(),
        checked_int(m, "svd"), f.sigma.data(), f.u.data(), checked_int(m, "svd"), vt.data(),
        checked_int(k, "svd"));
    if (info != 0)
        throw Error(ErrorCode::breakdown, "SVD did not converge (dgesdd info=" + std::to_string(info) + ")");

    for (Index j = 0; j < k; ++j)
        for (Index i = 0; i < n; ++i) f.v(i, j) = vt(j, i);

    // Deterministic sign convention: largest-magnitude entry of each right
    // singular vector made non-negative (first occurrence wins ties).
    for (Index j = 0; j < k; ++j) {
        Index arg = 0;
        Real best = 0.0;
        for (Index i = 0; i < n; ++i) {
            Real mag = std::abs(f.v(i, j));
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        if (f.v(arg, j) < 0.0) {
            for (Index i = 0; i < n; ++i) f.v(i, j) = -f.v(i, j);
            for (Index i = 0; i < m; ++i) f.u(i, j) = -f.u(i, j);
        }
    }
    return f;
}

std::optional<DenseCholesky> DenseCholesky::try_factor(DenseMatrix a) {
    if (a.rows() != a.cols())
        throw Error(ErrorCode::invalid_argument, "cholesky of non-square matrix");
    const lapack_int n = checked_int(a.rows(), "cholesky");
    lapack_int info = LAPACKE_dpotrf(LAPACK_COL_MAJOR, 'L', n, a.data(), std::max<lapack_int>(n, 1));
    if (info != 0) return std::nullopt;
    return DenseCholesky(std::move(a));
}

DenseCholesky DenseCholesky::factor(DenseMatrix a) {
    auto f = try_factor(std::move(a));
    if (!f) throw Error(ErrorCode::not_spd, "matrix is not positive definite (Cholesky breakdown)");
    return std::move(*f);
}

void DenseCholesky::solve_in_place(VectorView x) const {
    const Index n = factor_.rows();
    if (static_cast<Index>(x.size()) != n)
        throw Error(ErrorCode::dimension_mismatch, "cholesky solve dimension mismatch");
    lapack_int info = LAPACKE_dpotrs(LAPACK_COL_MAJOR, 'L', checked_int(n, "solve"), 1,
                                     factor_.data(), std::max<lapack_int>(checked_int(n, "solve"), 1),
                                     x.data(), std::max<lapack_int>(checked_int(n, "solve"), 1));
    if (info != 0) throw Error(ErrorCode::internal, "dpotrs failed");
}

std::vector<Real> DenseCholesky::solve(ConstVectorView b) const {
    std::vector<Real> x(b.begin(), b.end());
    solve_in_place(VectorView(x));
    return x;
}

void DenseCholesky::solve_in_place(DenseMatrix& b) const {
    const Index n = factor_.rows();
    if (b.rows() != n) throw Error(ErrorCode::dimension_mismatch, "cholesky solve dimension mismatch");
    lapack_int info = LAPACKE_dpotrs(LAPACK_COL_MAJOR, 'L', checked_int(n, "solve"),
                                     checked_int(b.cols(), "solve"), factor_.data(),
                                     std::max<lapack_int>(checked_int(n, "solve"), 1), b.data(),
                                     std::max<lapack_int>(checked_int(n, "solve"), 1));
    if (info != 0) throw Error(ErrorCode::internal, "dpotrs failed");
}

std::vector<Real> sym_eigenvalues(DenseMatrix a) {
    if (a.rows() != a.cols())
        throw Error(ErrorCode::invalid_argument, "eigenvalues of non-square matrix");
    const lapack_int n = checked_int(a.rows(), "eig");
    std::vector<Real> w(static_cast<std::size_t>(a.rows()), 0.0);
    lapack_int info =
        LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), std::max<lapack_int>(n, 1), w.data());
    if (info != 0)
        throw Error(ErrorCode::breakdown, "symmetric eigensolve failed (info=" + std::to_string(info) + ")");
    return w;
}

SymEigen sym_eigen(DenseMatrix a) {
    if (a.rows() != a.cols())
        throw Error(ErrorCode::invalid_argument, "eigendecomposition of non-square matrix");
    const lapack_int n = checked_int(a.rows(), "eig");
    SymEigen e;
    e.values.assign(static_cast<std::size_t>(a.rows()), 0.0);
    lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(),
                                     std::max<lapack_int>(n, 1), e.values.data());
    if (info != 0)
        throw Error(ErrorCode::breakdown, "symmetric eigensolve failed (info=" + std::to_string(info) + ")");
    e.vectors = std::move(a);
    return e;
}

SymEigen sym_definite_gevp(DenseMatrix a, DenseMatrix b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw Error(ErrorCode::invalid_argument, "generalized eigenproblem dimension mismatch");
    const lapack_int n = checked_int(a.rows(), "gevp");
    SymEigen e;
    e.values.assign(static_cast<std::size_t>(a.rows()), 0.0);
    lapack_int info =
        LAPACKE_dsygvd(LAPACK_COL_MAJOR, 1, 'V', 'L', n, a.data(), std::max<lapack_int>(n, 1),
                       b.data(), std::max<lapack_int>(n, 1), e.values.data());
    if (info != 0)
        throw Error(ErrorCode::breakdown,
                    "generalized eigensolve failed (dsygvd info=" + std::to_string(info) + ")");
    e.vectors = std::move(a);
    for (Real v : e.values)
        if (!std::isfinite(v)) throw Error(ErrorCode::breakdown, "non-finite generalized eigenvalue");
    return e;
}

Real spectral_norm_sym(const DenseMatrix& a) {
    if (a.rows() == 0) return 0.0;
    auto w = sym_eigenvalues(a);
    return std::max(std::abs(w.front()), std::abs(w.back()));
}

DenseMatrix gemm(const DenseMatrix& a, const DenseMatrix& b, bool transpose_a, bool transpose_b,
                 Real alpha) {
    const Index m = transpose_a ? a.cols() : a.rows();
    const Index ka = transpose_a ? a.rows() : a.cols();
    const Index kb = transpose_b ? b.cols() : b.rows();
    const Index n = transpose_b ? b.rows() : b.cols();
    if (ka != kb) throw Error(ErrorCode::dimension_mismatch, "gemm inner dimension mismatch");
    DenseMatrix c(m, n);
    if (m == 0 || n == 0 || ka == 0) return c;
    cblas_dgemm(CblasColMajor, transpose_a ? CblasTrans : CblasNoTrans,
                transpose_b ? CblasTrans : CblasNoTrans, static_cast<int>(m), static_cast<int>(n),
                static_cast<int>(ka), alpha, a.data(), static_cast<int>(a.rows()), b.data(),
                static_cast<int>(b.rows()), 0.0, c.data(), static_cast<int>(m));
    return c;
}

void solve_lower_triangular_in_place(const DenseMatrix& l, DenseMatrix& b) {
    if (l.rows() != l.cols() || l.rows() != b.rows())
        throw Error(ErrorCode::dimension_mismatch, "triangular solve dimension mismatch");
    if (b.rows() == 0 || b.cols() == 0) return;
    cblas_dtrsm(CblasColMajor, CblasLeft, CblasLower, CblasNoTrans, CblasNonUnit,
                static_cast<int>(b.rows()), static_cast<int>(b.cols()), 1.0, l.data(),
                static_cast<int>(l.rows()), b.data(), static_cast<int>(b.rows()));
}

void subtract_yty(DenseMatrix& c, const DenseMatrix& y) {
    if (c.rows() != c.cols() || y.cols() != c.rows())
        throw Error(ErrorCode::dimension_mismatch, "syrk dimension mismatch");
    if (c.rows() == 0) return;
    if (y.rows() == 0) return;
    cblas_dsyrk(CblasColMajor, CblasLower, CblasTrans, static_cast<int>(c.rows()),
                static_cast<int>(y.rows()), -1.0, y.data(), static_cast<int>(y.rows()), 1.0,
                c.data(), static_cast<int>(c.rows()));
    // dsyrk only touches the lower triangle; mirror it.
    for (Index j = 0; j < c.cols(); ++j)
        for (Index i = j + 1; i < c.rows(); ++i) c(j, i) = c(i, j);
}

}  // namespace ams
