#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "otg/oriented_graph.hpp"

namespace otg {

/// Applies perm as a vertex relabeling: vertex v of g becomes perm[v].
inline OrientedGraph relabel(const OrientedGraph& g, const std::vector<Vertex>& perm) {
    std::vector<Arc> arcs;
    arcs.reserve(g.arcs().size());
    for (const auto& [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
    return OrientedGraph(g.vertex_count(), std::move(arcs));
}

/// Factorial search over vertex bijections, so meant for n <= 8 or so. The
/// degree-pair screen below only prunes; the permutation scan is the
/// definition.
inline bool are_isomorphic_bruteforce(const OrientedGraph& g, const OrientedGraph& h) {
    const int n = g.vertex_count();
    if (n != h.vertex_count()) return false;
    if (g.arc_count() != h.arc_count()) return false;

    auto degree_profile = [](const OrientedGraph& x) {
        std::vector<std::pair<int, int>> prof(x.vertex_count());
        for (Vertex v = 0; v < x.vertex_count(); ++v)
            prof[v] = {x.out_degree(v), x.in_degree(v)};
        std::sort(prof.begin(), prof.end());
        return prof;
    };
    if (degree_profile(g) != degree_profile(h)) return false;

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& [u, v] : g.arcs())
            if (!h.has_arc(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace otg
