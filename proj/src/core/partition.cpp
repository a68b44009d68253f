#include "partition.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "errors.hpp"

namespace ams {

namespace {

/// BFS distances from a set of sources; unreachable vertices get -1.
std::vector<Index> bfs_distances(const AdjacencyGraph& g, std::span<const Index> sources) {
    std::vector<Index> dist(static_cast<std::size_t>(g.n_vertices()), -1);
    std::deque<Index> queue;
    for (Index s : sources) {
        dist[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Index v = queue.front();
        queue.pop_front();
        for (Index w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

/// Farthest vertex of `comp` under `dist`, ties broken by smallest id.
Index farthest_vertex(std::span<const Index> comp, const std::vector<Index>& dist) {
    Index best = comp[0];
    Index best_d = dist[static_cast<std::size_t>(comp[0])];
    for (Index v : comp) {
        Index d = dist[static_cast<std::size_t>(v)];
        if (d > best_d) {
            best = v;
            best_d = d;
        }
    }
    return best;
}

/// k seed vertices inside one connected component via farthest-point
/// traversal. The first seed is the farthest vertex from a seeded random
/// start, which lands on an extremal vertex of the component.
std::vector<Index> pick_seeds(const AdjacencyGraph& g, const std::vector<Index>& comp, Index k,
                              std::mt19937_64& rng) {
    std::vector<Index> seeds;
    if (k >= static_cast<Index>(comp.size())) {
        seeds.assign(comp.begin(), comp.end());
        return seeds;
    }
    Index start = comp[static_cast<std::size_t>(rng() % comp.size())];
    auto d0 = bfs_distances(g, std::span<const Index>(&start, 1));
    seeds.push_back(farthest_vertex(comp, d0));
    while (static_cast<Index>(seeds.size()) < k) {
        auto d = bfs_distances(g, seeds);
        seeds.push_back(farthest_vertex(comp, d));
    }
    return seeds;
}

/// Grows all seeds simultaneously, always expanding the currently smallest
/// subdomain by one vertex (smallest unclaimed neighbor first).
void grow_subdomains(const AdjacencyGraph& g, const std::vector<Index>& seeds,
                     std::vector<Index>& owner, Index id_base) {
    const Index k = static_cast<Index>(seeds.size());
    std::vector<std::deque<Index>> frontier(static_cast<std::size_t>(k));
    std::vector<Index> sizes(static_cast<std::size_t>(k), 0);
    std::set<std::pair<Index, Index>> active;  // (size, local id)

    for (Index s = 0; s < k; ++s) {
        owner[static_cast<std::size_t>(seeds[static_cast<std::size_t>(s)])] = id_base + s;
        frontier[static_cast<std::size_t>(s)].push_back(seeds[static_cast<std::size_t>(s)]);
        sizes[static_cast<std::size_t>(s)] = 1;
        active.insert({1, s});
    }

    while (!active.empty()) {
        auto [size, s] = *active.begin();
        active.erase(active.begin());
        auto& front = frontier[static_cast<std::size_t>(s)];
        Index claimed = -1;
        while (!front.empty() && claimed < 0) {
            Index v = front.front();
            for (Index w : g.neighbors(v)) {
                if (owner[static_cast<std::size_t>(w)] < 0) {
                    claimed = w;
                    break;
                }
            }
            if (claimed < 0) front.pop_front();  // v exhausted
        }
        if (claimed < 0) continue;  // subdomain can no longer grow
        owner[static_cast<std::size_t>(claimed)] = id_base + s;
        front.push_back(claimed);
        sizes[static_cast<std::size_t>(s)] += 1;
        active.insert({sizes[static_cast<std::size_t>(s)], s});
    }
}

}  // namespace

std::vector<std::vector<Index>> partition_graph(const AdjacencyGraph& g, Index n_parts,
                                                std::uint64_t seed) {
    const Index n = g.n_vertices();
    if (n_parts < 1 || n_parts > n)
        throw Error(ErrorCode::invalid_argument,
                    "subdomain count must be between 1 and the number of vertices");

    auto comps = g.components();
    const Index n_comps = static_cast<Index>(comps.size());
    std::mt19937_64 rng(seed);
    std::vector<Index> owner(static_cast<std::size_t>(n), -1);

    if (n_parts < n_comps) {
        // Fewer parts than components: pack whole components into parts,
        // biggest component to the currently lightest part.
        std::vector<Index> order(static_cast<std::size_t>(n_comps));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
            return comps[static_cast<std::size_t>(a)].size() > comps[static_cast<std::size_t>(b)].size();
        });
        std::set<std::pair<Index, Index>> bins;  // (load, part id)
        for (Index p = 0; p < n_parts; ++p) bins.insert({0, p});
        for (Index c : order) {
            auto [load, p] = *bins.begin();
            bins.erase(bins.begin());
            for (Index v : comps[static_cast<std::size_t>(c)]) owner[static_cast<std::size_t>(v)] = p;
            bins.insert({load + static_cast<Index>(comps[static_cast<std::size_t>(c)].size()), p});
        }
    } else {
        // Seats per component, proportional to size, at least one each and at
        // most the component size.
        std::vector<Index> seats(static_cast<std::size_t>(n_comps), 1);
        Index assigned = n_comps;
        // Largest-remainder rounds: repeatedly give a seat to the component
        // with the largest size/seats ratio that still has capacity.
        while (assigned < n_parts) {
            Index best = -1;
            Real best_ratio = -1.0;
            for (Index c = 0; c < n_comps; ++c) {
                Index sz = static_cast<Index>(comps[static_cast<std::size_t>(c)].size());
                if (seats[static_cast<std::size_t>(c)] >= sz) continue;
                Real ratio = static_cast<Real>(sz) / static_cast<Real>(seats[static_cast<std::size_t>(c)]);
                if (ratio > best_ratio) {
                    best_ratio = ratio;
                    best = c;
                }
            }
            if (best < 0)
                throw Error(ErrorCode::internal, "seat allocation failed");  // n_parts <= n rules this out
            seats[static_cast<std::size_t>(best)] += 1;
            ++assigned;
        }
        Index id_base = 0;
        for (Index c = 0; c < n_comps; ++c) {
            auto seeds = pick_seeds(g, comps[static_cast<std::size_t>(c)],
                                    seats[static_cast<std::size_t>(c)], rng);
            grow_subdomains(g, seeds, owner, id_base);
            id_base += static_cast<Index>(seeds.size());
        }
    }

    std::vector<std::vector<Index>> interiors(static_cast<std::size_t>(n_parts));
    for (Index v = 0; v < n; ++v) {
        Index p = owner[static_cast<std::size_t>(v)];
        if (p < 0) throw Error(ErrorCode::internal, "partition left a vertex unassigned");
        interiors[static_cast<std::size_t>(p)].push_back(v);
    }
    for (auto& set : interiors) {
        if (set.empty()) throw Error(ErrorCode::internal, "partition produced an empty subdomain");
        // vertices were appended in ascending order already
    }
    return interiors;
}

SubdomainLayout build_layout(const AdjacencyGraph& g, std::vector<std::vector<Index>> interiors) {
    const Index n = g.n_vertices();
    std::vector<Index> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < interiors.size(); ++i) {
        for (Index v : interiors[i]) {
            if (v < 0 || v >= n) throw Error(ErrorCode::invalid_argument, "interior index out of range");
            if (owner[static_cast<std::size_t>(v)] >= 0)
                throw Error(ErrorCode::invalid_argument, "interior sets are not disjoint");
            owner[static_cast<std::size_t>(v)] = static_cast<Index>(i);
        }
    }
    for (Index v = 0; v < n; ++v)
        if (owner[static_cast<std::size_t>(v)] < 0)
            throw Error(ErrorCode::invalid_argument, "interior sets do not cover every vertex");

    SubdomainLayout layout;
    layout.n = n;
    layout.subdomains.resize(interiors.size());

    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < interiors.size(); ++i) {
        auto& sd = layout.subdomains[i];
        std::vector<Index> interior = std::move(interiors[i]);
        std::sort(interior.begin(), interior.end());

        // Mark interior, then collect the distance-one boundary.
        for (Index v : interior) stamp[static_cast<std::size_t>(v)] = static_cast<int>(3 * i);
        std::vector<Index> boundary;
        for (Index v : interior)
            for (Index w : g.neighbors(v))
                if (stamp[static_cast<std::size_t>(w)] < static_cast<int>(3 * i)) {
                    stamp[static_cast<std::size_t>(w)] = static_cast<int>(3 * i + 1);
                    boundary.push_back(w);
                }
        std::sort(boundary.begin(), boundary.end());

        // Halo: distance one from the boundary, outside interior+boundary.
        std::vector<Index> halo;
        for (Index v : boundary)
            for (Index w : g.neighbors(v))
                if (stamp[static_cast<std::size_t>(w)] < static_cast<int>(3 * i)) {
                    stamp[static_cast<std::size_t>(w)] = static_cast<int>(3 * i + 2);
                    halo.push_back(w);
                }
        std::sort(halo.begin(), halo.end());

        sd.n_interior = static_cast<Index>(interior.size());
        sd.n_overlap = sd.n_interior + static_cast<Index>(boundary.size());
        sd.indices = std::move(interior);
        sd.indices.insert(sd.indices.end(), boundary.begin(), boundary.end());
        sd.indices.insert(sd.indices.end(), halo.begin(), halo.end());
    }
    return layout;
}

PartitionOfUnity build_partition_of_unity(const SubdomainLayout& layout, PouScheme scheme) {
    PartitionOfUnity pou;
    pou.scheme = scheme;
    pou.weights.resize(layout.subdomains.size());

    if (scheme == PouScheme::boolean_owner) {
        for (std::size_t i = 0; i < layout.subdomains.size(); ++i) {
            const auto& sd = layout.subdomains[i];
            pou.weights[i].assign(static_cast<std::size_t>(sd.n_overlap), 0.0);
            for (Index p = 0; p < sd.n_interior; ++p) pou.weights[i][static_cast<std::size_t>(p)] = 1.0;
        }
        return pou;
    }

    std::vector<Index> counts(static_cast<std::size_t>(layout.n), 0);
    for (const auto& sd : layout.subdomains)
        for (Index v : sd.overlapping()) counts[static_cast<std::size_t>(v)] += 1;
    for (std::size_t i = 0; i < layout.subdomains.size(); ++i) {
        const auto& sd = layout.subdomains[i];
        pou.weights[i].resize(static_cast<std::size_t>(sd.n_overlap));
        for (Index p = 0; p < sd.n_overlap; ++p) {
            Index v = sd.indices[static_cast<std::size_t>(p)];
            pou.weights[i][static_cast<std::size_t>(p)] =
                1.0 / static_cast<Real>(counts[static_cast<std::size_t>(v)]);
        }
    }
    return pou;
}

Coloring color_subdomains(const SubdomainLayout& layout, const AdjacencyGraph& g) {
    const Index n_sub = layout.count();
    // Memberships of each vertex in overlapping subdomain sets.
    std::vector<std::vector<Index>> member(static_cast<std::size_t>(layout.n));
    for (Index i = 0; i < n_sub; ++i)
        for (Index v : layout.subdomains[static_cast<std::size_t>(i)].overlapping())
            member[static_cast<std::size_t>(v)].push_back(i);

    std::vector<std::set<Index>> adj(static_cast<std::size_t>(n_sub));
    auto link = [&](Index a, Index b) {
        if (a == b) return;
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    };
    for (Index v = 0; v < layout.n; ++v) {
        const auto& mv = member[static_cast<std::size_t>(v)];
        for (std::size_t a = 0; a < mv.size(); ++a)
            for (std::size_t b = a + 1; b < mv.size(); ++b) link(mv[a], mv[b]);
        for (Index w : g.neighbors(v)) {
            if (w < v) continue;
            for (Index a : mv)
                for (Index b : member[static_cast<std::size_t>(w)]) link(a, b);
        }
    }

    Coloring coloring;
    coloring.color.assign(static_cast<std::size_t>(n_sub), -1);
    for (Index i = 0; i < n_sub; ++i) {
        std::set<int> used;
        for (Index j : adj[static_cast<std::size_t>(i)])
            if (coloring.color[static_cast<std::size_t>(j)] >= 0)
                used.insert(coloring.color[static_cast<std::size_t>(j)]);
        int c = 0;
        while (used.count(c)) ++c;
        coloring.color[static_cast<std::size_t>(i)] = c;
        coloring.num_colors = std::max(coloring.num_colors, c + 1);
    }
    return coloring;
}

void write_layout(const SubdomainLayout& layout, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io, "cannot open file for writing: " + path);
    out << "# subdomain layout: " << layout.count() << " subdomains, n = " << layout.n << "\n";
    for (Index i = 0; i < layout.count(); ++i) {
        const auto& sd = layout.subdomains[static_cast<std::size_t>(i)];
        out << "subdomain " << (i + 1) << "\n";
        auto write_set = [&](const char* name, std::span<const Index> set) {
            out << "  " << name << ":";
            for (Index v : set) out << " " << (v + 1);
            out << "\n";
        };
        write_set("interior", sd.interior());
        write_set("boundary", sd.boundary());
        write_set("halo", sd.halo());
    }
}

}  // namespace ams
