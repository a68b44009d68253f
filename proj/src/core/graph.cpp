#include "graph.hpp"

#include <deque>

#include "errors.hpp"

namespace ams {

AdjacencyGraph AdjacencyGraph::from_matrix(const CsrMatrix& a) {
    if (a.n_rows() != a.n_cols())
        throw Error(ErrorCode::invalid_argument, "adjacency graph requires a square matrix");
    if (!a.symmetric())
        throw Error(ErrorCode::invalid_argument,
                    "adjacency graph requires a matrix flagged symmetric");
    AdjacencyGraph g;
    const Index n = a.n_rows();
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    g.neighbors_.reserve(static_cast<std::size_t>(a.nnz()));
    for (Index i = 0; i < n; ++i) {
        for (Index k = a.row_offsets()[i]; k < a.row_offsets()[i + 1]; ++k) {
            Index j = a.col_indices()[k];
            if (j != i) g.neighbors_.push_back(j);
        }
        g.offsets_[static_cast<std::size_t>(i) + 1] = static_cast<Index>(g.neighbors_.size());
    }
    return g;
}

std::vector<std::vector<Index>> AdjacencyGraph::components() const {
    const Index n = n_vertices();
    std::vector<std::vector<Index>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Index s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Index> comp;
        std::deque<Index> queue{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!queue.empty()) {
            Index v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (Index w : neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace ams
