#pragma once

#include <vector>

#include "csr_matrix.hpp"
#include "dense_matrix.hpp"
#include "lapack.hpp"
#include "partition.hpp"
#include "types.hpp"

namespace ams {

/// Dense copy of the local block row: rows of the matrix restricted to the
/// overlapping set, columns restricted to the extended set. Every stored
/// entry of those rows lies inside the extended set (distance-one closure),
/// which is asserted at construction.
struct LocalBlockRow {
    DenseMatrix x;  // n_overlap x n_extended
    Index subdomain = 0;
    Index n_overlap = 0;
    Index n_extended = 0;
};

LocalBlockRow build_block_row(const CsrMatrix& a, const SubdomainLayout& layout, Index i);

/// SVD factors representing the shifted square root of X^T X:
///   V (Sigma + s1*eps I) V^T + s1*eps (I - V V^T),
/// an SPD operator on the extended set whose smallest eigenvalue is s1*eps.
struct SqrtSplitting {
    DenseMatrix v;            // n_extended x n_overlap, orthonormal columns
    std::vector<Real> sigma;  // non-increasing, length n_overlap
    Real sigma_max = 0.0;     // s1
    Real shift = 0.0;         // s1 * eps
    Index n_overlap = 0;
    Index n_extended = 0;
    Index subdomain = 0;
};

SqrtSplitting sqrt_splitting(const LocalBlockRow& block_row);

/// Applies the operator represented by the factors.
std::vector<Real> apply_sqrt_forward(const SqrtSplitting& s, ConstVectorView v);

/// Applies the closed-form inverse
///   V (Sigma + s1*eps I)^{-1} V^T + (s1*eps)^{-1} (I - V V^T).
std::vector<Real> apply_sqrt_inverse(const SqrtSplitting& s, ConstVectorView v);

/// Dense materialization V Sigma V^T + s1*eps I (tests and Schur elimination).
DenseMatrix materialize_sqrt(const SqrtSplitting& s);

/// The local splitting matrix: Schur complement of the shifted square root
/// onto the overlapping set. SPD up to roundoff; a_tilde(i, j) lives in the
/// overlapping index order.
struct LocalSplitting {
    DenseMatrix a_tilde;  // n_overlap x n_overlap, symmetric
    Real sigma_max = 0.0;
    Real shift = 0.0;
    Index subdomain = 0;
    int pivot_floor_activations = 0;
};

LocalSplitting schur_splitting(const SqrtSplitting& s);

/// Quadratic form u^T (R^T a_tilde R) u of the embedded splitting for a
/// global vector u.
Real embedded_quadratic_form(const LocalSplitting& splitting, const Subdomain& sd,
                             ConstVectorView u);

}  // namespace ams
