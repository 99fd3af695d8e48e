#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "otg/build.hpp"
#include "otg/nested.hpp"
#include "otg/oriented_graph.hpp"
#include "otg/sequence.hpp"
#include "otg/undirected_graph.hpp"

namespace otg {

/// Record of a successful peel: the creation sequence (first removal first,
/// which is most-recent-first), the removal order itself, and the vertex
/// left standing.
struct Extraction {
    TernarySequence sequence;
    std::vector<Vertex> removal_order;
    Vertex star = 0;
};

/// Peels one vertex per step, preferring isolated, then out-dominating, then
/// in-dominated, lowest index first. Success certifies membership; failure
/// with more than one vertex left certifies non-membership.
inline std::optional<Extraction> extract(const OrientedGraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<Symbol> records;
    std::vector<Vertex> order;
    int left = n;
    while (left > 1) {
        Vertex pick = -1;
        Symbol rec = Symbol::zero;
        for (Vertex v = 0; v < n && pick < 0; ++v) {
            if (!alive[v]) continue;
            bool isolated = true;
            for (Vertex u = 0; u < n; ++u)
                if (u != v && alive[u] && g.adjacent(u, v)) {
                    isolated = false;
                    break;
                }
            if (isolated) pick = v;
        }
        if (pick < 0) {
            for (Vertex v = 0; v < n && pick < 0; ++v) {
                if (!alive[v]) continue;
                bool out_dom = true;
                for (Vertex u = 0; u < n; ++u)
                    if (u != v && alive[u] && !g.has_arc(v, u)) {
                        out_dom = false;
                        break;
                    }
                if (out_dom) {
                    pick = v;
                    rec = Symbol::plus;
                }
            }
        }
        if (pick < 0) {
            for (Vertex v = 0; v < n && pick < 0; ++v) {
                if (!alive[v]) continue;
                bool in_dom = true;
                for (Vertex u = 0; u < n; ++u)
                    if (u != v && alive[u] && !g.has_arc(u, v)) {
                        in_dom = false;
                        break;
                    }
                if (in_dom) {
                    pick = v;
                    rec = Symbol::minus;
                }
            }
        }
        if (pick < 0) return std::nullopt;
        alive[pick] = false;
        records.push_back(rec);
        order.push_back(pick);
        --left;
    }
    Extraction ex;
    ex.sequence = TernarySequence(std::move(records));
    ex.removal_order = std::move(order);
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) ex.star = v;
    return ex;
}

inline std::optional<TernarySequence> extract_sequence(const OrientedGraph& g) {
    auto ex = extract(g);
    if (!ex) return std::nullopt;
    return std::move(ex->sequence);
}

/// Greedy undirected peel: remove an isolated vertex if any, else a
/// dominating one, until nothing is left. Threshold graphs are exactly the
/// graphs this empties, and for them any greedy order works.
inline bool is_threshold_undirected(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    for (int left = n; left > 0; --left) {
        Vertex isolated = -1, dominating = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            int deg = 0;
            for (Vertex u = 0; u < n; ++u)
                if (u != v && alive[u] && g.has_edge(u, v)) ++deg;
            if (deg == 0 && isolated < 0) isolated = v;
            if (deg == left - 1 && dominating < 0) dominating = v;
        }
        Vertex pick = isolated >= 0 ? isolated : dominating;
        if (pick < 0) return false;
        alive[pick] = false;
    }
    return true;
}

/// Membership via the orientation characterization: a transitive orientation
/// whose shadow is a threshold graph.
inline bool recognize(const OrientedGraph& g) {
    return is_transitive(g) && is_threshold_undirected(underlying(g));
}

/// Vertex partition into a top set (arcs leave), an independent set, and a
/// bottom set (arcs enter), with top+bottom inducing a tournament.
struct DisplitPartition {
    std::vector<Vertex> top;
    std::vector<Vertex> independent;
    std::vector<Vertex> bottom;

    friend bool operator==(const DisplitPartition&, const DisplitPartition&) = default;
};

/// Checks the four partition conditions directly against g.
inline bool is_valid_displit(const OrientedGraph& g, const DisplitPartition& p) {
    const int n = g.vertex_count();
    // 0 = top, 1 = independent, 2 = bottom; every vertex exactly once.
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    auto assign = [&](const std::vector<Vertex>& set, int tag) {
        for (Vertex v : set) {
            if (v < 0 || v >= n || side[v] != -1) return false;
            side[v] = tag;
        }
        return true;
    };
    if (!assign(p.top, 0) || !assign(p.independent, 1) || !assign(p.bottom, 2)) return false;
    for (Vertex v = 0; v < n; ++v)
        if (side[v] == -1) return false;

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const bool adj = g.adjacent(u, v);
            if (side[u] == 1 && side[v] == 1) {
                if (adj) return false;
            } else if (side[u] != 1 && side[v] != 1) {
                if (!adj) return false;
            }
            if (!adj || side[u] == side[v]) continue;
            // Arcs leave the top set and enter the bottom set.
            if (side[u] == 0 && !g.has_arc(u, v)) return false;
            if (side[v] == 0 && !g.has_arc(v, u)) return false;
            if (side[u] == 2 && !g.has_arc(v, u)) return false;
            if (side[v] == 2 && !g.has_arc(u, v)) return false;
        }
    return true;
}

/// Builds the partition off the peel: the survivor and every vertex peeled
/// as isolated form the independent set; the dominating vertices split by
/// the direction of their arc at the survivor, falling back on their peel
/// record if they miss it.
inline std::optional<DisplitPartition> displit_partition(const OrientedGraph& g) {
    auto ex = extract(g);
    if (!ex) return std::nullopt;
    DisplitPartition p;
    p.independent.push_back(ex->star);
    for (std::size_t i = 0; i < ex->removal_order.size(); ++i) {
        const Vertex v = ex->removal_order[i];
        const Symbol rec = ex->sequence[i];
        if (rec == Symbol::zero) {
            p.independent.push_back(v);
        } else if (g.has_arc(v, ex->star)) {
            p.top.push_back(v);
        } else if (g.has_arc(ex->star, v)) {
            p.bottom.push_back(v);
        } else if (rec == Symbol::plus) {
            p.top.push_back(v);
        } else {
            p.bottom.push_back(v);
        }
    }
    std::sort(p.top.begin(), p.top.end());
    std::sort(p.independent.begin(), p.independent.end());
    std::sort(p.bottom.begin(), p.bottom.end());
    return p;
}

/// The three-part nesting test tying N, N+ and N- together: N nested
/// everywhere; on the independent set, N+ and N- nested and ordered
/// consistently with N; on the tournament part, N+ and N- nested outright
/// and ordered oppositely to each other.
inline bool check_properly_nested(const OrientedGraph& g, const DisplitPartition& p) {
    if (!is_valid_displit(g, p))
        throw std::invalid_argument("check_properly_nested: partition is not a displit partition");

    const auto total = total_neighborhood_map(g);
    const auto out = out_neighborhood_map(g);
    const auto in = in_neighborhood_map(g);

    std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    if (!is_nested_family(total, all, false)) return false;

    const auto& ind = p.independent;
    if (!is_nested_family(out, ind, false) || !is_nested_family(in, ind, false)) return false;
    for (Vertex x : ind)
        for (Vertex y : ind) {
            if (x == y) continue;
            if (neighborhood_leq(total, x, y) &&
                (!neighborhood_leq(in, x, y) || !neighborhood_leq(out, x, y)))
                return false;
        }

    std::vector<Vertex> k;
    k.insert(k.end(), p.top.begin(), p.top.end());
    k.insert(k.end(), p.bottom.begin(), p.bottom.end());
    if (!is_nested_family(out, k, true) || !is_nested_family(in, k, true)) return false;
    for (Vertex x : k)
        for (Vertex y : k) {
            if (x == y) continue;
            if (neighborhood_lt(out, x, y) != neighborhood_lt(in, y, x)) return false;
        }
    return true;
}

/// Weights aligned to g's own labels: peel, realize the sequence, then pull
/// the weights back through the peel correspondence. Rebuilding from the
/// result reproduces g exactly.
inline WeightRealization realize_weights(const OrientedGraph& g) {
    auto ex = extract(g);
    if (!ex)
        throw std::invalid_argument("realize_weights: graph has no creation sequence");
    const WeightRealization base = realize_weights(ex->sequence);
    const int n = g.vertex_count();
    std::vector<long long> w(static_cast<std::size_t>(n));
    // k-th removed vertex played the part of rebuilt vertex n-1-k.
    for (std::size_t k = 0; k < ex->removal_order.size(); ++k)
        w[static_cast<std::size_t>(ex->removal_order[k])] =
            base.weights()[static_cast<std::size_t>(n) - 1 - k];
    w[static_cast<std::size_t>(ex->star)] = base.weights()[0];
    return WeightRealization(std::move(w), base.threshold());
}

} // namespace otg
