#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "distrec/trees/distance.hpp"
#include "distrec/trees/tree.hpp"

namespace distrec::trees {

/*
 * AHU encoding. The code of a rooted tree is "(" + sorted child codes + ")",
 * so two rooted trees are isomorphic iff their codes are equal. A free tree
 * is encoded at its center; a bicentral tree takes the smaller of the two
 * center-rooted codes.
 */

struct CanonicalCode {
    std::string code;
    // relabeling[v] is the canonical label of vertex v.
    std::vector<Vertex> relabeling;
};

namespace detail {

    struct RootedEncoding {
        std::vector<std::string> code;            // per vertex, of its subtree
        std::vector<std::vector<Vertex>> children; // sorted by child code
    };

    inline RootedEncoding encode_rooted(const Tree& t, Vertex root)
    {
        const std::size_t n = t.n();
        std::vector<Vertex> parent(n, n);
        std::vector<Vertex> order;
        order.reserve(n);
        order.push_back(root);
        parent[root] = root;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Vertex v = order[i];
            for (Vertex w : t.neighbors(v))
                if (parent[w] == n) {
                    parent[w] = v;
                    order.push_back(w);
                }
        }
        RootedEncoding enc;
        enc.code.resize(n);
        enc.children.resize(n);
        for (Vertex v : order)
            if (v != root)
                enc.children[parent[v]].push_back(v);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Vertex v = *it;
            auto& kids = enc.children[v];
            std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return enc.code[a] < enc.code[b]; });
            std::string c = "(";
            for (Vertex k : kids)
                c += enc.code[k];
            c += ")";
            enc.code[v] = std::move(c);
        }
        return enc;
    }

    // Preorder over children sorted by code.
    inline std::vector<Vertex> canonical_order(const RootedEncoding& enc, Vertex root)
    {
        std::vector<Vertex> order;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            order.push_back(v);
            const auto& kids = enc.children[v];
            for (auto it = kids.rbegin(); it != kids.rend(); ++it)
                stack.push_back(*it);
        }
        return order;
    }

} // namespace detail

// One or two vertices minimizing eccentricity, found by peeling leaves.
inline std::vector<Vertex> centers(const Tree& t)
{
    const std::size_t n = t.n();
    if (n <= 2) {
        std::vector<Vertex> all(n);
        for (Vertex v = 0; v < n; ++v)
            all[v] = v;
        return all;
    }
    std::vector<std::size_t> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1)
            layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex leaf : layer)
            for (Vertex w : t.neighbors(leaf))
                if (--deg[w] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

// AHU code of t rooted at `root`; equal codes iff some isomorphism maps root
// to root.
inline std::string rooted_code(const Tree& t, Vertex root)
{
    if (root >= t.n())
        throw DomainError("root vertex out of range");
    return detail::encode_rooted(t, root).code[root];
}

inline CanonicalCode canonical_code(const Tree& t)
{
    const std::vector<Vertex> cs = centers(t);
    Vertex root = cs.front();
    detail::RootedEncoding best = detail::encode_rooted(t, root);
    if (cs.size() == 2) {
        detail::RootedEncoding other = detail::encode_rooted(t, cs[1]);
        if (other.code[cs[1]] < best.code[root]) {
            best = std::move(other);
            root = cs[1];
        }
    }
    CanonicalCode out;
    out.code = best.code[root];
    out.relabeling.assign(t.n(), 0);
    const auto order = detail::canonical_order(best, root);
    for (std::size_t i = 0; i < order.size(); ++i)
        out.relabeling[order[i]] = i;
    return out;
}

// The canonical representative of t's isomorphism class.
inline Tree canonical_form(const Tree& t) { return t.relabeled(canonical_code(t).relabeling); }

inline bool isomorphic(const Tree& a, const Tree& b)
{
    return a.n() == b.n() && canonical_code(a).code == canonical_code(b).code;
}

// Orbits of Aut(t): u and v share an orbit iff their rooted codes agree.
// Orbits are sorted by smallest member; members ascend.
inline std::vector<std::vector<Vertex>> automorphism_orbits(const Tree& t)
{
    std::vector<std::pair<std::string, Vertex>> keyed;
    keyed.reserve(t.n());
    for (Vertex v = 0; v < t.n(); ++v)
        keyed.emplace_back(rooted_code(t, v), v);
    std::vector<std::vector<Vertex>> orbits;
    std::vector<bool> placed(t.n(), false);
    for (Vertex v = 0; v < t.n(); ++v) {
        if (placed[v])
            continue;
        std::vector<Vertex> orbit;
        for (const auto& [code, w] : keyed)
            if (code == keyed[v].first) {
                orbit.push_back(w);
                placed[w] = true;
            }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

} // namespace distrec::trees
