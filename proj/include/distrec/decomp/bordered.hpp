#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "distrec/decomp/decomposition.hpp"
#include "distrec/errors.hpp"
#include "distrec/exact/matrix.hpp"
#include "distrec/trees/distance.hpp"

namespace distrec::decomp {

using exact::BigInt;
using exact::IntMatrix;

// A square block D of size N (the part of the tree away from the subtree)
// and the column alpha of distances from the block to the attachment vertex.
// Nothing forces D to be symmetric or alpha to be a distance vector.
class GenericInstance {
public:
    GenericInstance() = default;

    GenericInstance(IntMatrix block, std::vector<BigInt> alpha) : block_(std::move(block)), alpha_(std::move(alpha))
    {
        if (!block_.square())
            throw DimensionError("instance block must be square");
        if (alpha_.size() != block_.rows())
            throw DimensionError("alpha length must equal block size");
    }

    std::size_t size() const noexcept { return alpha_.size(); }
    const IntMatrix& block() const noexcept { return block_; }
    const std::vector<BigInt>& alpha() const noexcept { return alpha_; }

private:
    IntMatrix block_;
    std::vector<BigInt> alpha_;
};

// Block = distance matrix of R without y (labels ascending), alpha =
// distances to y.
inline GenericInstance instance_from_tree(const Tree& r, Vertex y)
{
    if (y >= r.n())
        throw DomainError("attachment vertex not in R");
    const auto dist = trees::all_distances(r);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < r.n(); ++v)
        if (v != y)
            keep.push_back(v);
    IntMatrix block(keep.size(), keep.size());
    std::vector<BigInt> alpha(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = 0; j < keep.size(); ++j)
            block(i, j) = dist[keep[i]][keep[j]];
        alpha[i] = dist[keep[i]][y];
    }
    return GenericInstance(std::move(block), std::move(alpha));
}

// Entries uniform in [-bound, bound].
template <typename Rng>
GenericInstance sample_integer_instance(std::size_t n, std::int64_t bound, bool symmetric, Rng& rng)
{
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    IntMatrix block(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
            block(i, j) = dist(rng);
            if (symmetric)
                block(j, i) = block(i, j);
        }
    std::vector<BigInt> alpha(n);
    for (auto& a : alpha)
        a = dist(rng);
    return GenericInstance(std::move(block), std::move(alpha));
}

// Entries uniform in [0, p).
template <typename Rng>
GenericInstance sample_field_instance(std::size_t n, std::uint64_t p, bool symmetric, Rng& rng)
{
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    IntMatrix block(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
            block(i, j) = dist(rng);
            if (symmetric)
                block(j, i) = block(i, j);
        }
    std::vector<BigInt> alpha(n);
    for (auto& a : alpha)
        a = dist(rng);
    return GenericInstance(std::move(block), std::move(alpha));
}

// Block in the leading corner, one border row/column per subtree vertex v in
// border order with pattern alpha + d_S(x, v) e, and the subtree's distance
// matrix between border vertices.
inline IntMatrix bordered_form(const GenericInstance& g, const Tree& s, Vertex x)
{
    if (x >= s.n())
        throw DomainError("attachment vertex not in subtree");
    const std::size_t n = g.size();
    const std::vector<Vertex> order = Decomposition::border_order_of(s, x);
    const auto dist = trees::all_distances(s);
    IntMatrix m(n + order.size(), n + order.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = g.block()(i, j);
    for (std::size_t b = 0; b < order.size(); ++b) {
        const std::size_t shift = dist[x][order[b]];
        for (std::size_t i = 0; i < n; ++i) {
            m(i, n + b) = g.alpha()[i] + shift;
            m(n + b, i) = g.alpha()[i] + shift;
        }
        for (std::size_t c = 0; c < order.size(); ++c)
            m(n + b, n + c) = dist[order[b]][order[c]];
    }
    return m;
}

inline IntMatrix bordered_top(const Decomposition& d, const GenericInstance& g)
{
    return bordered_form(g, d.subtree(), d.attach());
}

// The minor with a pendant path of k vertices at the attachment vertex:
// borders alpha, alpha + e, ..., alpha + (k-1) e.
inline IntMatrix bordered_path(std::size_t k, const GenericInstance& g)
{
    if (k == 0)
        throw DomainError("bordered path needs at least one border");
    return bordered_form(g, trees::path(k), 0);
}

} // namespace distrec::decomp
