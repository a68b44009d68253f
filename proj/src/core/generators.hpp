#pragma once

#include <string>

#include "csr_matrix.hpp"

namespace ams {

/// Finite-difference diffusion operators with Dirichlet boundaries, used as
/// built-in test problems so nothing has to be downloaded.
///
/// The coefficient field is 1 everywhere except on stripes where it equals
/// `jump`. Stripes run across the last coordinate with width max(1, extent/16)
/// cells, so they cross subdomain boundaries. jump = 1 gives the constant-
/// coefficient Laplacian; laplace1d with jump 1 is exactly tridiag(-1, 2, -1).
CsrMatrix laplace1d(Index n, Real jump = 1.0);
CsrMatrix laplace2d(Index nx, Index ny, Real jump = 1.0);
CsrMatrix laplace3d(Index nx, Index ny, Index nz, Real jump = 1.0);

/// Parses a generator spec of the form
///   laplace1d:<n>[:jump=<v>]
///   laplace2d:<nx>x<ny>[:jump=<v>]
///   laplace3d:<nx>x<ny>x<nz>[:jump=<v>]
CsrMatrix generate_matrix(const std::string& spec);

}  // namespace ams
