#pragma once

// Slow, obviously-correct reference implementations. Test code only.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "distrec/exact/bigint.hpp"
#include "distrec/exact/matrix.hpp"
#include "distrec/trees/tree.hpp"

namespace oracle {

using distrec::exact::BigInt;
using distrec::exact::IntMatrix;
using distrec::trees::Tree;
using distrec::trees::Vertex;

// Laplace expansion along the first row.
inline BigInt cofactor_det(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    BigInt total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c)
                    minor(i - 1, k++) = m(i, j);
        const BigInt term = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

// Floyd-Warshall on the adjacency, independent of the BFS in the library.
inline std::vector<std::vector<long>> floyd_distances(const Tree& t)
{
    const std::size_t n = t.n();
    const long inf = static_cast<long>(n) + 1;
    std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
    for (Vertex v = 0; v < n; ++v)
        d[v][v] = 0;
    for (auto [u, v] : t.edges())
        d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// Lexicographically least edge list over every vertex permutation, with an
// optional marked vertex that must map to itself under comparison (it is
// encoded as the first field). Exponential; fine up to n = 7.
inline std::string brute_canonical(const Tree& t, long marked = -1)
{
    const std::size_t n = t.n();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::string best;
    do {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (auto [u, v] : t.edges()) {
            Vertex a = perm[u], b = perm[v];
            if (a > b)
                std::swap(a, b);
            e.emplace_back(a, b);
        }
        std::sort(e.begin(), e.end());
        std::string key = marked >= 0 ? std::to_string(perm[static_cast<Vertex>(marked)]) + "|" : "";
        for (auto [a, b] : e)
            key += std::to_string(a) + "-" + std::to_string(b) + ",";
        if (best.empty() || key < best)
            best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All n^(n-2) labeled trees via Pruefer words, decoded naively (quadratic
// smallest-leaf scan, no heap).
inline std::vector<Tree> all_labeled_trees(std::size_t n)
{
    if (n == 1)
        return {Tree(1, {})};
    if (n == 2)
        return {Tree(2, {{0, 1}})};
    std::vector<Tree> out;
    std::vector<Vertex> word(n - 2, 0);
    while (true) {
        std::vector<std::size_t> deg(n, 1);
        for (Vertex w : word)
            ++deg[w];
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex w : word) {
            Vertex leaf = 0;
            while (deg[leaf] != 1)
                ++leaf;
            edges.emplace_back(leaf, w);
            --deg[leaf];
            --deg[w];
        }
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v)
            if (deg[v] == 1)
                rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
        out.emplace_back(n, std::move(edges));

        std::size_t i = 0;
        while (i < word.size() && ++word[i] == n)
            word[i++] = 0;
        if (i == word.size())
            break;
    }
    return out;
}

// Isomorphism classes of trees on n vertices by brute canonicalization.
inline std::size_t count_unlabeled(std::size_t n)
{
    std::set<std::string> classes;
    for (const Tree& t : all_labeled_trees(n))
        classes.insert(brute_canonical(t));
    return classes.size();
}

// Inequivalent (tree, marked vertex) pairs on m vertices.
inline std::size_t count_rooted(std::size_t m)
{
    std::set<std::string> classes;
    std::set<std::string> seen_trees;
    for (const Tree& t : all_labeled_trees(m)) {
        if (!seen_trees.insert(brute_canonical(t)).second)
            continue;
        for (Vertex v = 0; v < m; ++v)
            classes.insert(brute_canonical(t, static_cast<long>(v)));
    }
    return classes.size();
}

} // namespace oracle
