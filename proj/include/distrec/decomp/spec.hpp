#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "distrec/decomp/decomposition.hpp"
#include "distrec/errors.hpp"
#include "distrec/trees/canonical.hpp"
#include "distrec/trees/distance.hpp"
#include "distrec/trees/tree.hpp"

namespace distrec::decomp {

/*
 * Subtree mini-grammar used on the command line and in the reference tables:
 *
 *   path:k              P_k on k vertices, labels along the path
 *   star:k              the star on k vertices (K_{1,k-1}), center 0
 *   starlike:r1,r2,...  K(r1,...,rm), center 0
 *   edges:0-1,1-2,...   explicit edge list
 *
 * Attachment: a vertex index, "end" (lowest-labeled leaf) or "center"
 * (lowest-labeled center).
 */

inline Tree parse_subtree_spec(std::string_view spec)
{
    const std::size_t colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw ConfigError("subtree spec needs the form kind:args, got '" + std::string(spec) + "'");
    const std::string_view kind = spec.substr(0, colon);
    const std::string_view args = spec.substr(colon + 1);
    try {
        if (kind == "path")
            return trees::path(trees::detail::parse_count(args, "path length"));
        if (kind == "star") {
            const std::size_t k = trees::detail::parse_count(args, "star size");
            if (k < 2)
                throw ConfigError("star:k needs k >= 2 vertices");
            return trees::star(k - 1);
        }
        if (kind == "starlike") {
            std::vector<std::size_t> arms;
            for (std::string_view part : trees::detail::split(args, ','))
                arms.push_back(trees::detail::parse_count(part, "arm length"));
            return trees::star_like(arms);
        }
        if (kind == "edges")
            return trees::parse_edge_list(args);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid subtree spec: ") + e.what());
    }
    throw ConfigError("unknown subtree kind '" + std::string(kind) + "' (path, star, starlike, edges)");
}

inline Vertex parse_attach(std::string_view text, const Tree& t)
{
    if (text == "end") {
        for (Vertex v = 0; v < t.n(); ++v)
            if (t.degree(v) <= 1)
                return v;
    }
    if (text == "center")
        return trees::centers(t).front();
    const Vertex v = trees::detail::parse_count(text, "attachment vertex");
    if (v >= t.n())
        throw ConfigError("attachment vertex " + std::to_string(v) + " not in subtree of size " +
                          std::to_string(t.n()));
    return v;
}

// Human-readable class name: P_k, K_{1,k}, K(r1,...,rm) or T[edges].
inline std::string describe(const Tree& t)
{
    const std::size_t n = t.n();
    if (n == 1)
        return "K_1";
    std::vector<Vertex> branch;
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
        max_deg = std::max(max_deg, t.degree(v));
        if (t.degree(v) >= 3)
            branch.push_back(v);
    }
    if (max_deg <= 2)
        return "P_" + std::to_string(n);
    if (max_deg == n - 1)
        return "K_{1," + std::to_string(n - 1) + "}";
    if (branch.size() == 1) {
        const Vertex c = branch.front();
        std::vector<std::size_t> arms;
        for (Vertex start : t.neighbors(c)) {
            std::size_t len = 1;
            Vertex prev = c;
            Vertex cur = start;
            while (t.degree(cur) == 2) {
                const auto& nb = t.neighbors(cur);
                const Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        std::string out = "K(";
        for (std::size_t i = 0; i < arms.size(); ++i)
            out += (i ? "," : "") + std::to_string(arms[i]);
        return out + ")";
    }
    return "T[" + trees::format_edge_list(trees::canonical_form(t)) + "]";
}

// Stable identifier of a canonical decomposition. Paths name the attachment
// by its distance to the nearer end ("P_5@0" is an end, "P_5@2" the middle),
// stars by role; other trees by canonical label ("K(1,1,2)@v3").
inline std::string decomposition_id(const Decomposition& d)
{
    const Tree& s = d.subtree();
    const std::string name = describe(s);
    const Vertex x = d.attach();
    if (name.rfind("P_", 0) == 0) {
        const auto dist = trees::distances_from(s, x);
        std::size_t to_end = s.n();
        for (Vertex v = 0; v < s.n(); ++v)
            if (s.degree(v) <= 1)
                to_end = std::min(to_end, dist[v]);
        return name + "@" + std::to_string(to_end);
    }
    if (name.rfind("K_{1,", 0) == 0)
        return name + (s.degree(x) > 1 ? "@center" : "@leaf");
    return name + "@v" + std::to_string(x);
}

} // namespace distrec::decomp
