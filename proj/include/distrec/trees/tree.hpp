#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distrec/errors.hpp"

namespace distrec::trees {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Labeled tree on vertices 0..n-1. Validated on construction (n-1 edges,
// connected, hence acyclic) and immutable afterwards.
class Tree {
public:
    Tree() : Tree(1, {}) {}

    Tree(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n)
    {
        if (n_ == 0)
            throw DomainError("a tree needs at least one vertex");
        if (edges_.size() != n_ - 1)
            throw DomainError("a tree on " + std::to_string(n_) + " vertices needs " + std::to_string(n_ - 1) +
                              " edges, got " + std::to_string(edges_.size()));
        for (auto& [u, v] : edges_) {
            if (u >= n_ || v >= n_)
                throw DomainError("edge endpoint out of range");
            if (u == v)
                throw DomainError("self-loop in tree");
            if (u > v)
                std::swap(u, v);
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& list : adj_)
            std::sort(list.begin(), list.end());

        // n-1 edges plus connectivity rules out cycles and multi-edges.
        std::vector<bool> seen(n_, false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj_[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n_)
            throw DomainError("edge list is not connected");
    }

    std::size_t n() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    // Tree with vertex v renamed to perm[v].
    Tree relabeled(std::span<const Vertex> perm) const
    {
        if (perm.size() != n_)
            throw DimensionError("relabeling size does not match tree");
        std::vector<bool> hit(n_, false);
        for (Vertex p : perm) {
            if (p >= n_ || hit[p])
                throw DomainError("relabeling is not a permutation");
            hit[p] = true;
        }
        std::vector<Edge> e;
        e.reserve(edges_.size());
        for (auto [u, v] : edges_)
            e.emplace_back(perm[u], perm[v]);
        return Tree(n_, std::move(e));
    }

    // Edges normalized (u < v) and sorted; equal iff the labeled trees are equal.
    std::vector<Edge> sorted_edges() const
    {
        std::vector<Edge> e = edges_;
        std::sort(e.begin(), e.end());
        return e;
    }

    friend bool operator==(const Tree& a, const Tree& b)
    {
        return a.n_ == b.n_ && a.sorted_edges() == b.sorted_edges();
    }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// P_k: k vertices in a line, 0-1-...-(k-1).
inline Tree path(std::size_t k)
{
    if (k == 0)
        throw DomainError("path needs at least one vertex");
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < k; ++v)
        e.emplace_back(v, v + 1);
    return Tree(k, std::move(e));
}

// K_{1,k}: center 0 joined to leaves 1..k.
inline Tree star(std::size_t k)
{
    if (k == 0)
        throw DomainError("star needs at least one leaf");
    std::vector<Edge> e;
    for (Vertex v = 1; v <= k; ++v)
        e.emplace_back(0, v);
    return Tree(k + 1, std::move(e));
}

// K(r_1, ..., r_m): paths with r_1..r_m edges glued at a common end, which is
// vertex 0. Arm i occupies consecutive labels, nearest the center first.
inline Tree star_like(std::span<const std::size_t> arms)
{
    if (arms.empty())
        throw DomainError("star-like tree needs at least one arm");
    std::vector<Edge> e;
    Vertex next = 1;
    for (std::size_t r : arms) {
        if (r == 0)
            throw DomainError("star-like arm lengths must be positive");
        Vertex prev = 0;
        for (std::size_t step = 0; step < r; ++step) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Tree(next, std::move(e));
}

inline Tree star_like(std::initializer_list<std::size_t> arms)
{
    return star_like(std::span<const std::size_t>(arms.begin(), arms.size()));
}

namespace detail {

    inline std::size_t parse_count(std::string_view text, const char* what)
    {
        std::size_t value = 0;
        const auto* first = text.data();
        const auto* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (text.empty() || ec != std::errc() || ptr != last)
            throw ConfigError(std::string("malformed ") + what + ": '" + std::string(text) + "'");
        return value;
    }

    inline std::vector<std::string_view> split(std::string_view text, char sep)
    {
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        while (true) {
            const std::size_t pos = text.find(sep, start);
            parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
            if (pos == std::string_view::npos)
                break;
            start = pos + 1;
        }
        return parts;
    }

} // namespace detail

// "0-1,1-2,1-3" -> tree on max label + 1 vertices. "" is the single vertex.
inline Tree parse_edge_list(std::string_view text)
{
    std::vector<Edge> edges;
    Vertex max_label = 0;
    if (!text.empty()) {
        for (std::string_view item : detail::split(text, ',')) {
            const auto ends = detail::split(item, '-');
            if (ends.size() != 2)
                throw ConfigError("malformed edge '" + std::string(item) + "', expected u-v");
            const Vertex u = detail::parse_count(ends[0], "vertex");
            const Vertex v = detail::parse_count(ends[1], "vertex");
            max_label = std::max({max_label, u, v});
            edges.emplace_back(u, v);
        }
    }
    try {
        return Tree(max_label + 1, std::move(edges));
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid tree edge list: ") + e.what());
    }
}

inline std::string format_edge_list(const Tree& t)
{
    std::string out;
    for (auto [u, v] : t.sorted_edges()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

} // namespace distrec::trees
