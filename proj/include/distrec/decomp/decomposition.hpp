#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "distrec/errors.hpp"
#include "distrec/trees/canonical.hpp"
#include "distrec/trees/distance.hpp"
#include "distrec/trees/enumerate.hpp"
#include "distrec/trees/tree.hpp"

namespace distrec::decomp {

using trees::Tree;
using trees::Vertex;

// A subtree S_m with a marked attachment vertex x, the shape of T_n = S_m o_x R.
// Stored canonically: the subtree in canonical labeling and x the smallest
// label of its automorphism orbit, so equivalent decompositions compare equal.
class Decomposition {
public:
    Decomposition(const Tree& subtree, Vertex attach)
    {
        if (subtree.n() < 2)
            throw DomainError("a decomposition subtree needs at least two vertices");
        if (attach >= subtree.n())
            throw DomainError("attachment vertex " + std::to_string(attach) + " is not in the subtree");
        const trees::CanonicalCode cc = trees::canonical_code(subtree);
        subtree_ = subtree.relabeled(cc.relabeling);
        const Vertex mapped = cc.relabeling[attach];
        const std::string key = trees::rooted_code(subtree_, mapped);
        attach_ = mapped;
        for (Vertex v = 0; v < subtree_.n(); ++v)
            if (trees::rooted_code(subtree_, v) == key) {
                attach_ = v;
                break;
            }
    }

    const Tree& subtree() const noexcept { return subtree_; }
    Vertex attach() const noexcept { return attach_; }
    std::size_t m() const noexcept { return subtree_.n(); }

    // Subtree vertices sorted by (distance from attach, label); attach first.
    std::vector<Vertex> border_order() const { return border_order_of(subtree_, attach_); }

    static std::vector<Vertex> border_order_of(const Tree& s, Vertex x)
    {
        const auto dist = trees::distances_from(s, x);
        std::vector<Vertex> order(s.n());
        for (Vertex v = 0; v < s.n(); ++v)
            order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
        return order;
    }

    friend bool operator==(const Decomposition& a, const Decomposition& b)
    {
        return a.attach_ == b.attach_ && a.subtree_ == b.subtree_;
    }

private:
    Tree subtree_;
    Vertex attach_ = 0;
};

// True iff an isomorphism of the subtrees carries one attachment vertex to
// the other (the two decompositions induce permutation-similar matrices).
inline bool decompositions_equivalent(const Decomposition& a, const Decomposition& b)
{
    return a.m() == b.m() &&
           trees::rooted_code(a.subtree(), a.attach()) == trees::rooted_code(b.subtree(), b.attach());
}

// T = S o_x R with x identified with y. Vertex order of the result: R's
// vertices other than y in increasing label order, then S's vertices in
// border order (x first, so y/x sits right after the R block). With this
// order, distance_matrix(compose(...)) equals bordered_top on the
// instance taken from (R, y).
inline Tree compose(const Tree& s, Vertex x, const Tree& r, Vertex y)
{
    if (x >= s.n())
        throw DomainError("attachment vertex not in S");
    if (y >= r.n())
        throw DomainError("attachment vertex not in R");
    std::vector<Vertex> r_label(r.n());
    Vertex next = 0;
    for (Vertex v = 0; v < r.n(); ++v)
        if (v != y)
            r_label[v] = next++;
    std::vector<Vertex> s_label(s.n());
    for (Vertex v : Decomposition::border_order_of(s, x))
        s_label[v] = next++;
    r_label[y] = s_label[x];

    std::vector<trees::Edge> edges;
    edges.reserve(next - 1);
    for (auto [u, v] : r.edges())
        edges.emplace_back(r_label[u], r_label[v]);
    for (auto [u, v] : s.edges())
        edges.emplace_back(s_label[u], s_label[v]);
    return Tree(next, std::move(edges));
}

// Every inequivalent (S_m, x): trees in enumeration order, then orbits by
// smallest member.
inline std::vector<Decomposition> enumerate_decompositions(std::size_t m,
                                                           std::size_t cap = trees::default_enumeration_cap)
{
    if (m < 2)
        throw DomainError("decompositions need m >= 2");
    std::vector<Decomposition> out;
    for (const Tree& t : trees::enumerate_trees(m, cap))
        for (const auto& orbit : trees::automorphism_orbits(t))
            out.emplace_back(t, orbit.front());
    return out;
}

} // namespace distrec::decomp
