#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <span>
#include <vector>

#include "distrec/errors.hpp"
#include "distrec/trees/tree.hpp"

namespace distrec::trees {

// Decode a Prufer word of length n-2 over {0..n-1} into its labeled tree.
inline Tree prufer_decode(std::span<const Vertex> word, std::size_t n)
{
    if (n == 0)
        throw DomainError("tree needs at least one vertex");
    if (n <= 2) {
        if (!word.empty())
            throw DimensionError("Prufer word must be empty for n <= 2");
        return n == 1 ? Tree(1, {}) : Tree(2, {{0, 1}});
    }
    if (word.size() != n - 2)
        throw DimensionError("Prufer word length must be n - 2");

    std::vector<std::size_t> degree(n, 1);
    for (Vertex v : word) {
        if (v >= n)
            throw DomainError("Prufer symbol out of range");
        ++degree[v];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.push(v);

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex v : word) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1)
            leaves.push(v);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Tree(n, std::move(edges));
}

// Uniform over the n^(n-2) labeled trees; deterministic for a fixed seed.
inline Tree random_tree(std::size_t n, std::uint64_t seed)
{
    if (n == 0)
        throw DomainError("tree needs at least one vertex");
    if (n <= 2)
        return prufer_decode({}, n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> symbol(0, n - 1);
    std::vector<Vertex> word(n - 2);
    for (auto& s : word)
        s = symbol(rng);
    return prufer_decode(word, n);
}

} // namespace distrec::trees
