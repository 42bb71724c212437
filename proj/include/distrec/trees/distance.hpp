#pragma once

#include <cstddef>
#include <deque>
#include <limits>
#include <vector>

#include "distrec/errors.hpp"
#include "distrec/exact/matrix.hpp"
#include "distrec/trees/tree.hpp"

namespace distrec::trees {

// The distance matrix of a tree is an IntMatrix of path lengths.
using DistanceMatrix = exact::IntMatrix;

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

// BFS distances from `source` to every vertex.
inline std::vector<std::size_t> distances_from(const Tree& t, Vertex source)
{
    if (source >= t.n())
        throw DomainError("source vertex out of range");
    std::vector<std::size_t> dist(t.n(), unreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : t.neighbors(v))
            if (dist[w] == unreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

inline std::vector<std::vector<std::size_t>> all_distances(const Tree& t)
{
    std::vector<std::vector<std::size_t>> d;
    d.reserve(t.n());
    for (Vertex v = 0; v < t.n(); ++v)
        d.push_back(distances_from(t, v));
    return d;
}

inline DistanceMatrix distance_matrix(const Tree& t)
{
    const std::size_t n = t.n();
    DistanceMatrix m(n, n);
    for (Vertex v = 0; v < n; ++v) {
        const auto row = distances_from(t, v);
        for (Vertex w = 0; w < n; ++w)
            m(v, w) = row[w];
    }
    return m;
}

// Inverse of distance_matrix: the tree whose distance matrix is m, or a
// DomainError when m is not the distance matrix of any tree.
inline Tree tree_from_distance_matrix(const DistanceMatrix& m)
{
    if (!m.square() || m.rows() == 0)
        throw DomainError("distance matrix must be square and non-empty");
    const std::size_t n = m.rows();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (m(u, v) == 1)
                edges.emplace_back(u, v);
    Tree t = [&] {
        try {
            return Tree(n, std::move(edges));
        } catch (const DomainError&) {
            throw DomainError("matrix is not the distance matrix of a tree: unit entries do not form a tree");
        }
    }();
    if (!(distance_matrix(t) == m))
        throw DomainError("matrix is not the distance matrix of a tree: entries disagree with path lengths");
    return t;
}

} // namespace distrec::trees
