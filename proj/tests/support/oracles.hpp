#pragma once

// Test-side oracles, kept deliberately independent of the library's own
// algorithms so the two can disagree when one is wrong.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "otg/otg.hpp"

namespace oracle {

/// Lexicographically least arc list over all relabelings. Two graphs are
/// isomorphic exactly when their codes match. Factorial cost, n <= 8.
inline std::vector<otg::Arc> mincode(const otg::OrientedGraph& g) {
    const int n = g.vertex_count();
    std::vector<otg::Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<otg::Arc> best = g.arcs();
    do {
        std::vector<otg::Arc> arcs;
        arcs.reserve(g.arcs().size());
        for (const auto& [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
        std::sort(arcs.begin(), arcs.end());
        if (arcs < best) best = arcs;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Vertex deletion with the survivors squeezed back to 0..n-2.
inline otg::OrientedGraph induced_delete(const otg::OrientedGraph& g, otg::Vertex del) {
    std::vector<otg::Arc> arcs;
    auto shift = [del](otg::Vertex v) { return v > del ? v - 1 : v; };
    for (const auto& [u, v] : g.arcs())
        if (u != del && v != del) arcs.emplace_back(shift(u), shift(v));
    return otg::OrientedGraph(g.vertex_count() - 1, std::move(arcs));
}

namespace detail {

inline bool removable(const otg::OrientedGraph& g, std::uint32_t alive, otg::Vertex v) {
    bool any_in = false, any_out = false, all_out = true, all_in = true;
    for (otg::Vertex u = 0; u < g.vertex_count(); ++u) {
        if (u == v || !(alive >> u & 1)) continue;
        if (g.has_arc(v, u)) any_out = true;
        else all_out = false;
        if (g.has_arc(u, v)) any_in = true;
        else all_in = false;
    }
    if (!any_in && !any_out) return true;          // isolated
    return (all_out && !any_in) || (all_in && !any_out);
}

inline bool eliminable_from(const otg::OrientedGraph& g, std::uint32_t alive,
                            std::map<std::uint32_t, bool>& memo) {
    if (__builtin_popcount(alive) <= 1) return true;
    auto it = memo.find(alive);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (otg::Vertex v = 0; v < g.vertex_count() && !ok; ++v)
        if ((alive >> v & 1) && removable(g, alive, v))
            ok = eliminable_from(g, alive & ~(std::uint32_t{1} << v), memo);
    memo[alive] = ok;
    return ok;
}

} // namespace detail

/// True iff SOME removal order of isolated / out-dominating / in-dominated
/// vertices peels g down to a single vertex. Backtracks over every choice.
inline bool eliminable_any_order(const otg::OrientedGraph& g) {
    std::map<std::uint32_t, bool> memo;
    const std::uint32_t all = (std::uint32_t{1} << g.vertex_count()) - 1;
    return detail::eliminable_from(g, all, memo);
}

/// Every transitive orientation of g, bucketed into isomorphism classes;
/// returns one representative per class. 2^(edge count) orientations.
inline std::vector<otg::OrientedGraph> transitive_orientation_classes(
    const otg::UndirectedGraph& g) {
    std::vector<otg::OrientedGraph> reps;
    const auto& edges = g.edges();
    const std::uint64_t total = std::uint64_t{1} << edges.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<otg::Arc> arcs;
        arcs.reserve(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto [u, v] = edges[i];
            if (mask >> i & 1) arcs.emplace_back(u, v);
            else arcs.emplace_back(v, u);
        }
        otg::OrientedGraph oriented(g.vertex_count(), std::move(arcs));
        if (!otg::is_transitive(oriented)) continue;
        bool fresh = true;
        for (const auto& r : reps)
            if (otg::are_isomorphic_bruteforce(oriented, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(std::move(oriented));
    }
    return reps;
}

/// Mask-based transitivity for sweep speed: out-neighbor bitmasks, one per
/// vertex; transitive iff out[v] is a subset of out[u] for every arc u->v.
inline bool is_transitive_masks(const std::vector<std::uint32_t>& out) {
    const int n = static_cast<int>(out.size());
    for (int u = 0; u < n; ++u) {
        std::uint32_t targets = out[u];
        while (targets) {
            const int v = __builtin_ctz(targets);
            targets &= targets - 1;
            if (out[v] & ~out[u]) return false;
        }
    }
    return true;
}

} // namespace oracle
