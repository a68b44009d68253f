#pragma once

#include <optional>
#include <vector>

#include "csr_matrix.hpp"
#include "lapack.hpp"
#include "partition.hpp"
#include "splitting.hpp"

namespace ams {

/// Eigenvectors of the local pencil (D A_ii D, a_tilde + delta I) whose
/// eigenvalues exceed 1/tau, largest first, capped at nev_max.
struct SubdomainEigenBasis {
    std::vector<Real> eigenvalues;  // selected, descending
    DenseMatrix vectors;            // n_overlap x selected count, unit columns
    Real lambda_max = 0.0;          // largest eigenvalue of the pencil
    Real delta = 0.0;               // diagonal shift applied to the right side
    Index n_candidates = 0;         // eigenvalues above the threshold before capping

    Index selected() const { return vectors.cols(); }
};

/// Solves the symmetric-definite pencil and selects eigenvalues > 1/tau.
/// nev_max == 0 means unlimited. Eigenvectors are unit-norm with a
/// deterministic sign (largest-magnitude entry non-negative).
SubdomainEigenBasis solve_gevp(const DenseMatrix& a_ii, ConstVectorView d_weights,
                               const LocalSplitting& splitting, Real tau, Index nev_max);

/// Coarse interpolation and the Galerkin coarse operator.
///
/// Row r of `r0` is the r-th selected local vector scaled by the partition of
/// unity, scattered to its subdomain's overlapping indices. c00 = R0 A R0^T.
struct CoarseSpace {
    Index n = 0;         // fine size
    Index n_coarse = 0;  // number of rows of R0
    CsrMatrix r0;
    DenseMatrix c00;
    std::optional<DenseCholesky> c00_factor;
    std::vector<std::pair<Index, Index>> subdomain_rows;  // [begin, end) per subdomain
    std::vector<Index> dropped_rows;                      // removed by the rank fallback
};

CoarseSpace assemble_coarse(const SubdomainLayout& layout, const PartitionOfUnity& pou,
                            const std::vector<SubdomainEigenBasis>& bases, const CsrMatrix& a);

/// Upper bound on the condition number of the two-level preconditioned
/// operator: (k_c + 1) * (2 + (2 k_c + 1) * k_m / tau).
Real condition_number_bound(Index k_c, Index k_m, Real tau);

}  // namespace ams
