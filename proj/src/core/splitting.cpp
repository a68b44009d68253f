#include "splitting.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace ams {

LocalBlockRow build_block_row(const CsrMatrix& a, const SubdomainLayout& layout, Index i) {
    if (i < 0 || i >= layout.count())
        throw Error(ErrorCode::invalid_argument, "subdomain id out of range");
    const auto& sd = layout.subdomains[static_cast<std::size_t>(i)];

    // Closure check: every stored column in the overlapping rows must belong
    // to the extended set, otherwise the layout does not match the matrix.
    std::vector<char> in_extended(static_cast<std::size_t>(a.n_cols()), 0);
    for (Index v : sd.extended()) in_extended[static_cast<std::size_t>(v)] = 1;
    for (Index v : sd.overlapping()) {
        for (Index k = a.row_offsets()[v]; k < a.row_offsets()[v + 1]; ++k) {
            if (a.values()[k] != 0.0 && !in_extended[static_cast<std::size_t>(a.col_indices()[k])])
                throw Error(ErrorCode::structure,
                            "block row of subdomain " + std::to_string(i + 1) +
                                " has entries outside the extended set (layout does not match "
                                "the matrix pattern)");
        }
    }

    LocalBlockRow br;
    br.subdomain = i;
    br.n_overlap = sd.n_overlap;
    br.n_extended = sd.n_extended();
    br.x = a.extract_dense(sd.overlapping(), sd.extended());
    return br;
}

SqrtSplitting sqrt_splitting(const LocalBlockRow& block_row) {
    const DenseMatrix& x = block_row.x;
    if (x.rows() == 0 || x.cols() == 0)
        throw Error(ErrorCode::invalid_argument, "empty block row");

    auto f = svd_economic(x);
    SqrtSplitting s;
    s.subdomain = block_row.subdomain;
    s.n_overlap = block_row.n_overlap;
    s.n_extended = block_row.n_extended;
    s.v = std::move(f.v);
    s.sigma = std::move(f.sigma);
    s.sigma_max = s.sigma.empty() ? 0.0 : s.sigma.front();
    s.shift = s.sigma_max * kEps;
    return s;
}

namespace {

/// w = V diag(d) V^T v + c (v - V V^T v) for diagonal coefficients d.
std::vector<Real> apply_factors(const SqrtSplitting& s, ConstVectorView v,
                                const std::vector<Real>& d, Real complement_coeff) {
    if (static_cast<Index>(v.size()) != s.n_extended)
        throw Error(ErrorCode::dimension_mismatch, "splitting apply dimension mismatch");
    std::vector<Real> t = s.v.multiply_transpose(v);  // V^T v
    std::vector<Real> vvt(v.size(), 0.0);
    {
        std::vector<Real> tmp = s.v.multiply(ConstVectorView(t));  // V V^T v
        vvt = std::move(tmp);
    }
    for (std::size_t k = 0; k < t.size(); ++k) t[k] *= d[k];
    std::vector<Real> w = s.v.multiply(ConstVectorView(t));  // V diag(d) V^T v
    for (std::size_t k = 0; k < w.size(); ++k)
        w[k] += complement_coeff * (v[k] - vvt[k]);
    return w;
}

}  // namespace

std::vector<Real> apply_sqrt_forward(const SqrtSplitting& s, ConstVectorView v) {
    std::vector<Real> d(s.sigma.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = s.sigma[k] + s.shift;
    return apply_factors(s, v, d, s.shift);
}

std::vector<Real> apply_sqrt_inverse(const SqrtSplitting& s, ConstVectorView v) {
    if (s.sigma_max == 0.0)
        throw Error(ErrorCode::singular,
                    "zero block row: the shifted square root is singular to working precision");
    std::vector<Real> d(s.sigma.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = 1.0 / (s.sigma[k] + s.shift);
    return apply_factors(s, v, d, 1.0 / s.shift);
}

DenseMatrix materialize_sqrt(const SqrtSplitting& s) {
    // V Sigma V^T + shift * I. The complement term shift*(I - V V^T) and the
    // shift on the V-range combine into a plain diagonal shift.
    DenseMatrix vs = s.v;  // columns scaled by sigma
    for (Index j = 0; j < vs.cols(); ++j) {
        Real* cj = vs.col(j);
        const Real sj = s.sigma[static_cast<std::size_t>(j)];
        for (Index i = 0; i < vs.rows(); ++i) cj[i] *= sj;
    }
    DenseMatrix m = gemm(vs, s.v, false, true);
    m.symmetrize();
    m.add_to_diagonal(s.shift);
    return m;
}

namespace {

/// Cholesky with a diagonal pivot floor: pivots smaller than `floor_value`
/// are clamped, and the number of clamps is reported.
int floored_cholesky_in_place(DenseMatrix& a, Real floor_value) {
    const Index n = a.rows();
    int activations = 0;
    for (Index j = 0; j < n; ++j) {
        Real d = a(j, j);
        for (Index k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
        if (d < floor_value) {
            d = floor_value;
            ++activations;
        }
        const Real ljj = std::sqrt(d);
        a(j, j) = ljj;
        for (Index i = j + 1; i < n; ++i) {
            Real v = a(i, j);
            for (Index k = 0; k < j; ++k) v -= a(i, k) * a(j, k);
            a(i, j) = v / ljj;
        }
    }
    return activations;
}

}  // namespace

LocalSplitting schur_splitting(const SqrtSplitting& s) {
    const Index n1 = s.n_overlap;
    const Index n2 = s.n_extended - s.n_overlap;

    DenseMatrix m = materialize_sqrt(s);
    LocalSplitting out;
    out.subdomain = s.subdomain;
    out.sigma_max = s.sigma_max;
    out.shift = s.shift;

    if (n2 == 0) {
        out.a_tilde = std::move(m);
        return out;
    }

    DenseMatrix m11(n1, n1), m21(n2, n1), m22(n2, n2);
    for (Index j = 0; j < n1; ++j) {
        for (Index i = 0; i < n1; ++i) m11(i, j) = m(i, j);
        for (Index i = 0; i < n2; ++i) m21(i, j) = m(n1 + i, j);
    }
    for (Index j = 0; j < n2; ++j)
        for (Index i = 0; i < n2; ++i) m22(i, j) = m(n1 + i, n1 + j);

    // The halo block inherits the diagonal shift, so it is SPD; the floored
    // factorization only engages when roundoff eats the shift.
    if (auto chol = DenseCholesky::try_factor(m22)) {
        solve_lower_triangular_in_place(chol->lower(), m21);
    } else {
        out.pivot_floor_activations = floored_cholesky_in_place(m22, s.shift);
        solve_lower_triangular_in_place(m22, m21);
    }
    subtract_yty(m11, m21);  // M11 - M12 M22^{-1} M21

    const Real asym = m11.max_asymmetry();
    const Real scale = std::max(m11.max_abs(), std::numeric_limits<Real>::min());
    if (asym > 1e-10 * scale)
        throw Error(ErrorCode::breakdown,
                    "Schur elimination lost symmetry (relative asymmetry " +
                        std::to_string(asym / scale) + ")");
    m11.symmetrize();
    out.a_tilde = std::move(m11);
    return out;
}

Real embedded_quadratic_form(const LocalSplitting& splitting, const Subdomain& sd,
                             ConstVectorView u) {
    auto overlap = sd.overlapping();
    std::vector<Real> local(overlap.size());
    for (std::size_t p = 0; p < overlap.size(); ++p)
        local[p] = u[static_cast<std::size_t>(overlap[p])];
    std::vector<Real> w = splitting.a_tilde.multiply(ConstVectorView(local));
    return dot(ConstVectorView(local), ConstVectorView(w));
}

}  // namespace ams
