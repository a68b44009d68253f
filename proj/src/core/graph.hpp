#pragma once

#include <vector>

#include "csr_matrix.hpp"
#include "types.hpp"

namespace ams {

/// Undirected adjacency structure taken from the nonzero pattern of a
/// symmetric sparse matrix, self-loops removed.
class AdjacencyGraph {
public:
    static AdjacencyGraph from_matrix(const CsrMatrix& a);

    Index n_vertices() const noexcept { return static_cast<Index>(offsets_.size()) - 1; }
    Index n_edges() const noexcept { return static_cast<Index>(neighbors_.size()) / 2; }

    std::span<const Index> neighbors(Index v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }

    Index degree(Index v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Connected components; each component's vertex list is ascending and
    /// components are ordered by their smallest vertex.
    std::vector<std::vector<Index>> components() const;

private:
    std::vector<Index> offsets_{0};
    std::vector<Index> neighbors_;
};

}  // namespace ams
