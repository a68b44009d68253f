#include "generators.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace ams {

namespace {

/// Stripe coefficient along one axis: alternating bands of width
/// max(1, extent/16).
Real stripe_coefficient(Index coord, Index extent, Real jump) {
    Index width = std::max<Index>(1, extent / 16);
    return ((coord / width) % 2 == 1) ? jump : 1.0;
}

/// Harmonic mean; the edge weight between grid points with coefficients a, b.
Real edge_weight(Real a, Real b) { return 2.0 * a * b / (a + b); }

struct GridSpec {
    std::array<Index, 3> dims{1, 1, 1};
    int rank = 0;
    Real jump = 1.0;
};

CsrMatrix grid_laplacian(const GridSpec& g) {
    const auto [nx, ny, nz] = g.dims;
    if (nx <= 0 || ny <= 0 || nz <= 0)
        throw Error(ErrorCode::invalid_argument, "grid dimensions must be positive");
    const Index n = nx * ny * nz;
    // The stripe axis is the last axis of the grid.
    const Index stripe_extent = g.rank == 1 ? nx : (g.rank == 2 ? ny : nz);

    auto vid = [&](Index x, Index y, Index z) { return (z * ny + y) * nx + x; };
    auto coef = [&](Index x, Index y, Index z) {
        Index c = g.rank == 1 ? x : (g.rank == 2 ? y : z);
        return stripe_coefficient(c, stripe_extent, g.jump);
    };

    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(n) * 7);
    for (Index z = 0; z < nz; ++z) {
        for (Index y = 0; y < ny; ++y) {
            for (Index x = 0; x < nx; ++x) {
                const Index i = vid(x, y, z);
                const Real ci = coef(x, y, z);
                Real diag = 0.0;
                auto couple = [&](Index xn, Index yn, Index zn, bool inside) {
                    if (inside) {
                        Real w = edge_weight(ci, coef(xn, yn, zn));
                        diag += w;
                        t.push_back({i, vid(xn, yn, zn), -w});
                    } else {
                        diag += ci;  // Dirichlet boundary closure
                    }
                };
                couple(x - 1, y, z, x > 0);
                couple(x + 1, y, z, x + 1 < nx);
                if (g.rank >= 2) {
                    couple(x, y - 1, z, y > 0);
                    couple(x, y + 1, z, y + 1 < ny);
                }
                if (g.rank >= 3) {
                    couple(x, y, z - 1, z > 0);
                    couple(x, y, z + 1, z + 1 < nz);
                }
                t.push_back({i, i, diag});
            }
        }
    }
    CsrMatrix m = CsrMatrix::from_triplets(n, n, std::move(t));
    m.set_symmetric(true);
    return m;
}

}  // namespace

CsrMatrix laplace1d(Index n, Real jump) { return grid_laplacian({{n, 1, 1}, 1, jump}); }

CsrMatrix laplace2d(Index nx, Index ny, Real jump) { return grid_laplacian({{nx, ny, 1}, 2, jump}); }

CsrMatrix laplace3d(Index nx, Index ny, Index nz, Real jump) {
    return grid_laplacian({{nx, ny, nz}, 3, jump});
}

CsrMatrix generate_matrix(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw Error(ErrorCode::invalid_argument, "empty generator spec");

    const std::string& kind = parts[0];
    int rank = kind == "laplace1d" ? 1 : kind == "laplace2d" ? 2 : kind == "laplace3d" ? 3 : 0;
    if (rank == 0)
        throw Error(ErrorCode::invalid_argument,
                    "unknown generator '" + kind + "' (expected laplace1d/laplace2d/laplace3d)");
    if (parts.size() < 2)
        throw Error(ErrorCode::invalid_argument, "generator spec missing dimensions: " + spec);

    GridSpec g;
    g.rank = rank;
    {
        std::stringstream ds(parts[1]);
        std::string d;
        int got = 0;
        while (std::getline(ds, d, 'x')) {
            if (got >= rank)
                throw Error(ErrorCode::invalid_argument, "too many dimensions in spec: " + spec);
            try {
                g.dims[static_cast<std::size_t>(got)] = std::stoll(d);
            } catch (const std::exception&) {
                throw Error(ErrorCode::invalid_argument, "bad dimension '" + d + "' in spec: " + spec);
            }
            ++got;
        }
        if (got != rank)
            throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(rank) +
                                                         " dimensions in spec: " + spec);
    }
    for (std::size_t p = 2; p < parts.size(); ++p) {
        const std::string& opt = parts[p];
        if (opt.rfind("jump=", 0) == 0) {
            try {
                g.jump = std::stod(opt.substr(5));
            } catch (const std::exception&) {
                throw Error(ErrorCode::invalid_argument, "bad jump value in spec: " + spec);
            }
            if (g.jump <= 0.0)
                throw Error(ErrorCode::invalid_argument, "jump must be positive: " + spec);
        } else {
            throw Error(ErrorCode::invalid_argument, "unknown generator option '" + opt + "'");
        }
    }
    return grid_laplacian(g);
}

}  // namespace ams
