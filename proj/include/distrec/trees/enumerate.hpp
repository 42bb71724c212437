#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "distrec/errors.hpp"
#include "distrec/trees/canonical.hpp"
#include "distrec/trees/tree.hpp"

namespace distrec::trees {

inline constexpr std::size_t default_enumeration_cap = 12;

// One canonical representative per unlabeled tree on n vertices, ordered by
// canonical code. Built by growing every tree on n-1 vertices by one leaf at
// each vertex and deduplicating by code.
inline std::vector<Tree> enumerate_trees(std::size_t n, std::size_t cap = default_enumeration_cap)
{
    if (n == 0)
        throw DomainError("trees need at least one vertex");
    if (n > cap)
        throw ConfigError("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));

    std::map<std::string, Tree> level{{canonical_code(Tree(1, {})).code, Tree(1, {})}};
    for (std::size_t size = 2; size <= n; ++size) {
        std::map<std::string, Tree> next;
        for (const auto& [code, t] : level) {
            for (Vertex v = 0; v < t.n(); ++v) {
                std::vector<Edge> edges = t.edges();
                edges.emplace_back(v, t.n());
                const Tree grown(size, std::move(edges));
                CanonicalCode cc = canonical_code(grown);
                if (!next.contains(cc.code))
                    next.emplace(std::move(cc.code), grown.relabeled(cc.relabeling));
            }
        }
        level = std::move(next);
    }
    std::vector<Tree> out;
    out.reserve(level.size());
    for (auto& [code, t] : level)
        out.push_back(t);
    return out;
}

} // namespace distrec::trees
