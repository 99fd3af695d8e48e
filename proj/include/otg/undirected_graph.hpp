#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "otg/oriented_graph.hpp"

namespace otg {

using Edge = std::pair<Vertex, Vertex>; // stored with first < second

/// Simple undirected graph on vertices 0..n-1.
class UndirectedGraph {
public:
    explicit UndirectedGraph(int vertex_count) : UndirectedGraph(vertex_count, {}) {}

    UndirectedGraph(int vertex_count, std::vector<Edge> edges)
        : n_(vertex_count), edges_(std::move(edges)) {
        if (n_ <= 0)
            throw std::invalid_argument("UndirectedGraph: vertex count must be positive");
        for (auto& [u, v] : edges_)
            if (u > v) std::swap(u, v);
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto [u, v] = edges_[i];
            if (u < 0 || v >= n_)
                throw std::invalid_argument("UndirectedGraph: edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("UndirectedGraph: loops are not allowed");
            if (i > 0 && edges_[i] == edges_[i - 1])
                throw std::invalid_argument("UndirectedGraph: duplicate edge");
        }
    }

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// Sorted, each stored as (min, max).
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(Vertex u, Vertex v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> nb;
        for (const auto& [a, b] : edges_) {
            if (a == v) nb.push_back(b);
            else if (b == v) nb.push_back(a);
        }
        std::sort(nb.begin(), nb.end());
        return nb;
    }

    int degree(Vertex v) const {
        int d = 0;
        for (const auto& [a, b] : edges_) d += (a == v || b == v);
        return d;
    }

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

/// Shadow of a digraph: keep each arc as an edge, forget direction.
inline UndirectedGraph underlying(const OrientedGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.arcs().size());
    for (const auto& [u, v] : g.arcs()) edges.emplace_back(u, v);
    return UndirectedGraph(g.vertex_count(), std::move(edges));
}

/// True iff no four vertices a,b,c,d induce edges ab, cd with ac, bd both
/// absent. Checking ordered 4-tuples covers every labeling of the pattern.
inline bool is_switch_free(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
            if (b == a || !g.has_edge(a, b)) continue;
            for (Vertex c = 0; c < n; ++c) {
                if (c == a || c == b || g.has_edge(a, c)) continue;
                for (Vertex d = 0; d < n; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (g.has_edge(c, d) && !g.has_edge(b, d)) return false;
                }
            }
        }
    return true;
}

} // namespace otg
