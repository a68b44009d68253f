#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

namespace ams {

using Index = std::int64_t;
using Real = double;

/// Double-precision unit roundoff used for diagonal shifts (~2.22e-16).
inline constexpr Real kEps = std::numeric_limits<Real>::epsilon();

using VectorView = std::span<Real>;
using ConstVectorView = std::span<const Real>;

/// Uniform samples in [-1, 1], reproducible for a fixed seed.
inline std::vector<Real> random_uniform(Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<Real> dist(-1.0, 1.0);
    std::vector<Real> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = dist(rng);
    return v;
}

inline Real dot(ConstVectorView a, ConstVectorView b) {
    Real s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Real norm2(ConstVectorView a) {
    Real s = 0.0;
    for (Real x : a) s += x * x;
    return std::sqrt(s);
}

inline Real norm_inf(ConstVectorView a) {
    Real m = 0.0;
    for (Real x : a) m = std::max(m, std::abs(x));
    return m;
}

/// y += alpha * x
inline void axpy(Real alpha, ConstVectorView x, VectorView y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(VectorView x, Real alpha) {
    for (auto& v : x) v *= alpha;
}

}  // namespace ams
