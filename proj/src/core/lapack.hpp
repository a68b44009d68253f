#pragma once

#include <optional>
#include <vector>

#include "dense_matrix.hpp"
#include "types.hpp"

namespace ams {

/// Economic SVD, X = U diag(sigma) V^T with sigma non-increasing.
/// Signs are normalized so the largest-magnitude entry of each column of V
/// is non-negative (reproducible factors).
struct SvdFactors {
    DenseMatrix u;            // m x k
    std::vector<Real> sigma;  // k = min(m, n)
    DenseMatrix v;            // n x k
};

SvdFactors svd_economic(const DenseMatrix& x);

/// Cholesky factorization A = L L^T of an SPD matrix (lower triangle).
class DenseCholesky {
public:
    static std::optional<DenseCholesky> try_factor(DenseMatrix a);
    /// Throws Error(not_spd) when the factorization breaks down.
    static DenseCholesky factor(DenseMatrix a);

    Index size() const noexcept { return factor_.rows(); }
    const DenseMatrix& lower() const noexcept { return factor_; }

    void solve_in_place(VectorView x) const;
    std::vector<Real> solve(ConstVectorView b) const;
    /// Solves for several right-hand sides stored as columns.
    void solve_in_place(DenseMatrix& b) const;

private:
    explicit DenseCholesky(DenseMatrix f) : factor_(std::move(f)) {}
    DenseMatrix factor_;
};

/// All eigenvalues of a symmetric matrix, ascending.
std::vector<Real> sym_eigenvalues(DenseMatrix a);

struct SymEigen {
    std::vector<Real> values;  // ascending
    DenseMatrix vectors;       // columns
};

SymEigen sym_eigen(DenseMatrix a);

/// Symmetric-definite generalized eigenproblem A v = lambda B v with B SPD.
/// Eigenvalues ascending, eigenvectors B-orthonormal.
SymEigen sym_definite_gevp(DenseMatrix a, DenseMatrix b);

/// Spectral norm of a symmetric matrix via its eigenvalues.
Real spectral_norm_sym(const DenseMatrix& a);

/// C = alpha * op(A) * op(B), op in {identity, transpose}.
DenseMatrix gemm(const DenseMatrix& a, const DenseMatrix& b, bool transpose_a = false,
                 bool transpose_b = false, Real alpha = 1.0);

/// B <- L^{-1} B for the lower-triangular L (forward substitution, BLAS3).
void solve_lower_triangular_in_place(const DenseMatrix& l, DenseMatrix& b);

/// C = C - Y^T Y restricted to the full square update (syrk + mirror).
void subtract_yty(DenseMatrix& c, const DenseMatrix& y);

}  // namespace ams
