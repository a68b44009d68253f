#pragma once

#include <string>
#include <vector>

#include "graph.hpp"
#include "types.hpp"

namespace ams {

/// One subdomain's index sets, stored as a single concatenated array
/// [interior | boundary | halo]. Each segment is sorted ascending and the
/// concatenation order is preserved everywhere downstream.
struct Subdomain {
    std::vector<Index> indices;
    Index n_interior = 0;
    Index n_overlap = 0;  // interior + boundary

    std::span<const Index> interior() const {
        return {indices.data(), static_cast<std::size_t>(n_interior)};
    }
    std::span<const Index> boundary() const {
        return {indices.data() + n_interior, static_cast<std::size_t>(n_overlap - n_interior)};
    }
    std::span<const Index> halo() const {
        return {indices.data() + n_overlap, indices.size() - static_cast<std::size_t>(n_overlap)};
    }
    /// Interior plus boundary.
    std::span<const Index> overlapping() const {
        return {indices.data(), static_cast<std::size_t>(n_overlap)};
    }
    /// Interior plus boundary plus halo.
    std::span<const Index> extended() const { return {indices.data(), indices.size()}; }

    Index n_extended() const { return static_cast<Index>(indices.size()); }
};

struct SubdomainLayout {
    Index n = 0;  // global problem size
    std::vector<Subdomain> subdomains;

    Index count() const { return static_cast<Index>(subdomains.size()); }
};

enum class PouScheme { boolean_owner, multiplicity };

/// Diagonal partition-of-unity weights, one vector per subdomain covering its
/// overlapping index set. Prolonged weights sum to one at every global index.
struct PartitionOfUnity {
    PouScheme scheme = PouScheme::boolean_owner;
    std::vector<std::vector<Real>> weights;
};

struct Coloring {
    std::vector<int> color;  // per subdomain
    int num_colors = 0;
};

/// Splits the graph into `n_parts` non-empty disjoint interior sets covering
/// every vertex: farthest-point seeding followed by balanced greedy BFS
/// growth. Deterministic for a fixed seed.
std::vector<std::vector<Index>> partition_graph(const AdjacencyGraph& g, Index n_parts,
                                                std::uint64_t seed);

/// Derives boundary (distance one from the interior) and halo (distance one
/// from the boundary, outside interior+boundary) sets for each interior set.
SubdomainLayout build_layout(const AdjacencyGraph& g, std::vector<std::vector<Index>> interiors);

PartitionOfUnity build_partition_of_unity(const SubdomainLayout& layout, PouScheme scheme);

/// Greedy coloring of the subdomain interaction graph: two subdomains
/// interact when their overlapping sets share a vertex or are joined by an
/// edge of g.
Coloring color_subdomains(const SubdomainLayout& layout, const AdjacencyGraph& g);

/// Text dump of the three index segments per subdomain (1-based indices).
void write_layout(const SubdomainLayout& layout, const std::string& path);

}  // namespace ams
