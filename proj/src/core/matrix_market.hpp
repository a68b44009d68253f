#pragma once

#include <string>
#include <vector>

#include "csr_matrix.hpp"
#include "types.hpp"

namespace ams {

/// Reads a Matrix Market coordinate file (real, general or symmetric).
///
/// Symmetric headers have their off-diagonal entries mirrored; duplicates are
/// summed per the Matrix Market convention; explicit zeros stay in the
/// pattern. A general file whose assembled matrix passes the symmetry test is
/// flagged symmetric. Malformed input raises ParseError with the line number.
CsrMatrix read_matrix_market(const std::string& path);

/// Reads a vector from a Matrix Market array file or a plain whitespace-
/// separated text file (one or more numbers per line).
std::vector<Real> read_vector(const std::string& path);

void write_matrix_market(const CsrMatrix& a, const std::string& path);

}  // namespace ams
