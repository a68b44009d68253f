#include "coarse.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace ams {

SubdomainEigenBasis solve_gevp(const DenseMatrix& a_ii, ConstVectorView d_weights,
                               const LocalSplitting& splitting, Real tau, Index nev_max) {
    if (tau <= 0.0) throw Error(ErrorCode::invalid_argument, "tau must be positive");
    const Index n = a_ii.rows();
    if (a_ii.cols() != n || static_cast<Index>(d_weights.size()) != n ||
        splitting.a_tilde.rows() != n)
        throw Error(ErrorCode::dimension_mismatch, "local pencil dimension mismatch");

    // Left side: D A_ii D.
    DenseMatrix s(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i)
            s(i, j) = d_weights[static_cast<std::size_t>(i)] * a_ii(i, j) *
                      d_weights[static_cast<std::size_t>(j)];

    // Right side: the splitting matrix, shifted just enough to factor.
    Real delta = std::max(splitting.shift, splitting.sigma_max * kEps);
    if (delta == 0.0) delta = kEps;
    DenseMatrix b = splitting.a_tilde;
    for (int attempt = 0;; ++attempt) {
        DenseMatrix probe = b;
        probe.add_to_diagonal(delta);
        if (DenseCholesky::try_factor(std::move(probe))) break;
        if (attempt >= 40)
            throw Error(ErrorCode::breakdown,
                        "local splitting matrix cannot be made positive definite");
        delta *= 10.0;
    }
    b.add_to_diagonal(delta);

    SymEigen eig = sym_definite_gevp(std::move(s), std::move(b));  // ascending

    SubdomainEigenBasis basis;
    basis.delta = delta;
    basis.lambda_max = eig.values.empty() ? 0.0 : eig.values.back();

    const Real threshold = 1.0 / tau;
    Index first_above = n;
    for (Index k = 0; k < n; ++k) {
        if (eig.values[static_cast<std::size_t>(k)] > threshold) {
            first_above = k;
            break;
        }
    }
    basis.n_candidates = n - first_above;
    Index take = basis.n_candidates;
    if (nev_max > 0) take = std::min(take, nev_max);

    basis.vectors = DenseMatrix(n, take);
    basis.eigenvalues.reserve(static_cast<std::size_t>(take));
    for (Index c = 0; c < take; ++c) {
        Index k = n - 1 - c;  // descending eigenvalue order
        basis.eigenvalues.push_back(eig.values[static_cast<std::size_t>(k)]);
        const Real* src = eig.vectors.col(k);
        Real* dst = basis.vectors.col(c);
        Real nrm = 0.0;
        for (Index i = 0; i < n; ++i) nrm += src[i] * src[i];
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) throw Error(ErrorCode::breakdown, "zero eigenvector returned");
        Index arg = 0;
        Real best = 0.0;
        for (Index i = 0; i < n; ++i) {
            Real mag = std::abs(src[i]);
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        const Real sign = src[arg] < 0.0 ? -1.0 : 1.0;
        for (Index i = 0; i < n; ++i) dst[i] = sign * src[i] / nrm;
    }
    return basis;
}

namespace {

/// Full-pivot Cholesky rank probe: returns the (sorted) set of pivot rows
/// that keep the matrix positive definite at the given relative tolerance.
std::vector<Index> pivoted_cholesky_keep(const DenseMatrix& c, Real rel_tol) {
    const Index n = c.rows();
    DenseMatrix s = c;
    std::vector<Index> active(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;

    Real max_diag0 = 0.0;
    for (Index i = 0; i < n; ++i) max_diag0 = std::max(max_diag0, s(i, i));
    const Real cutoff = rel_tol * max_diag0;

    std::vector<Index> keep;
    std::vector<Real> l(static_cast<std::size_t>(n), 0.0);
    while (!active.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < active.size(); ++k)
            if (s(active[k], active[k]) > s(active[best], active[best])) best = k;
        const Index p = active[best];
        if (s(p, p) <= cutoff) break;
        keep.push_back(p);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));

        const Real d = std::sqrt(s(p, p));
        for (Index i : active) l[static_cast<std::size_t>(i)] = s(i, p) / d;
        for (Index i : active)
            for (Index j : active)
                s(i, j) -= l[static_cast<std::size_t>(i)] * l[static_cast<std::size_t>(j)];
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

}  // namespace

CoarseSpace assemble_coarse(const SubdomainLayout& layout, const PartitionOfUnity& pou,
                            const std::vector<SubdomainEigenBasis>& bases, const CsrMatrix& a) {
    const Index n_sub = layout.count();
    if (static_cast<Index>(bases.size()) != n_sub ||
        static_cast<Index>(pou.weights.size()) != n_sub)
        throw Error(ErrorCode::invalid_argument, "bases/pou inconsistent with layout");

    CoarseSpace cs;
    cs.n = layout.n;

    // Rows of R0: partition-of-unity-scaled local vectors scattered to global
    // indices, concatenated in subdomain order.
    std::vector<Triplet> triplets;
    Index row = 0;
    cs.subdomain_rows.reserve(static_cast<std::size_t>(n_sub));
    for (Index i = 0; i < n_sub; ++i) {
        const auto& sd = layout.subdomains[static_cast<std::size_t>(i)];
        const auto& basis = bases[static_cast<std::size_t>(i)];
        const auto& w = pou.weights[static_cast<std::size_t>(i)];
        const Index begin = row;
        for (Index c = 0; c < basis.selected(); ++c) {
            const Real* z = basis.vectors.col(c);
            auto overlap = sd.overlapping();
            for (std::size_t p = 0; p < overlap.size(); ++p) {
                const Real v = w[p] * z[p];
                if (v != 0.0) triplets.push_back({row, overlap[p], v});
            }
            ++row;
        }
        cs.subdomain_rows.emplace_back(begin, row);
    }
    cs.n_coarse = row;
    cs.r0 = CsrMatrix::from_triplets(cs.n_coarse, cs.n, std::move(triplets));
    if (cs.n_coarse == 0) return cs;

    auto galerkin_product = [&](const CsrMatrix& r0) {
        const Index nc = r0.n_rows();
        DenseMatrix c00(nc, nc);
        std::vector<Real> work(static_cast<std::size_t>(cs.n), 0.0);
        std::vector<Index> touched;
        for (Index r = 0; r < nc; ++r) {
            // work = A * r0(r, :)^T, accumulated through the rows of A.
            touched.clear();
            for (Index k = r0.row_offsets()[r]; k < r0.row_offsets()[r + 1]; ++k) {
                const Index col = r0.col_indices()[k];
                const Real v = r0.values()[k];
                for (Index ak = a.row_offsets()[col]; ak < a.row_offsets()[col + 1]; ++ak) {
                    const Index j = a.col_indices()[ak];
                    if (work[static_cast<std::size_t>(j)] == 0.0) touched.push_back(j);
                    work[static_cast<std::size_t>(j)] += a.values()[ak] * v;
                }
            }
            // c00(r, s) = r0(s, :) . work for s >= r; mirrored below.
            for (Index s = r; s < nc; ++s) {
                Real acc = 0.0;
                for (Index k = r0.row_offsets()[s]; k < r0.row_offsets()[s + 1]; ++k)
                    acc += r0.values()[k] * work[static_cast<std::size_t>(r0.col_indices()[k])];
                c00(r, s) = acc;
                c00(s, r) = acc;
            }
            for (Index j : touched) work[static_cast<std::size_t>(j)] = 0.0;
        }
        return c00;
    };

    cs.c00 = galerkin_product(cs.r0);
    auto factor = DenseCholesky::try_factor(cs.c00);
    if (!factor) {
        // Rank fallback: keep a well-conditioned subset of rows and warn.
        auto keep = pivoted_cholesky_keep(cs.c00, 1e-12);
        std::vector<char> kept(static_cast<std::size_t>(cs.n_coarse), 0);
        for (Index r : keep) kept[static_cast<std::size_t>(r)] = 1;
        for (Index r = 0; r < cs.n_coarse; ++r)
            if (!kept[static_cast<std::size_t>(r)]) cs.dropped_rows.push_back(r);

        std::vector<Index> all_cols(static_cast<std::size_t>(cs.n));
        for (Index j = 0; j < cs.n; ++j) all_cols[static_cast<std::size_t>(j)] = j;
        cs.r0 = cs.r0.extract_csr(keep, all_cols);

        // Remap per-subdomain row ranges onto the kept rows.
        std::vector<std::pair<Index, Index>> ranges;
        ranges.reserve(cs.subdomain_rows.size());
        Index pos = 0;
        for (auto [begin, end] : cs.subdomain_rows) {
            Index count = 0;
            for (Index r : keep)
                if (r >= begin && r < end) ++count;
            ranges.emplace_back(pos, pos + count);
            pos += count;
        }
        cs.subdomain_rows = std::move(ranges);
        cs.n_coarse = static_cast<Index>(keep.size());
        if (cs.n_coarse == 0) {
            cs.c00 = DenseMatrix();
            return cs;
        }
        cs.c00 = galerkin_product(cs.r0);
        factor = DenseCholesky::try_factor(cs.c00);
        if (!factor)
            throw Error(ErrorCode::breakdown,
                        "coarse operator is not positive definite after rank fallback");
    }
    cs.c00_factor = std::move(factor);
    return cs;
}

Real condition_number_bound(Index k_c, Index k_m, Real tau) {
    if (k_c < 1 || k_m < 1)
        throw Error(ErrorCode::invalid_argument, "coloring and multiplicity constants must be >= 1");
    if (tau <= 0.0) throw Error(ErrorCode::invalid_argument, "tau must be positive");
    const Real kc = static_cast<Real>(k_c);
    const Real km = static_cast<Real>(k_m);
    return (kc + 1.0) * (2.0 + (2.0 * kc + 1.0) * km / tau);
}

}  // namespace ams
