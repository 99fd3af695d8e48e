#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace otg {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>; // (tail, head)

/// Loop-free digraph on vertices 0..n-1 with at most one arc per vertex
/// pair (no 2-cycles). Immutable after construction; arcs are kept sorted,
/// so equality is label-exact.
class OrientedGraph {
public:
    explicit OrientedGraph(int vertex_count) : OrientedGraph(vertex_count, {}) {}

    OrientedGraph(int vertex_count, std::vector<Arc> arcs)
        : n_(vertex_count), arcs_(std::move(arcs)) {
        if (n_ <= 0)
            throw std::invalid_argument("OrientedGraph: vertex count must be positive");
        std::sort(arcs_.begin(), arcs_.end());
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            const auto [u, v] = arcs_[i];
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::invalid_argument("OrientedGraph: arc endpoint out of range");
            if (u == v)
                throw std::invalid_argument("OrientedGraph: loops are not allowed");
            if (i > 0 && arcs_[i] == arcs_[i - 1])
                throw std::invalid_argument("OrientedGraph: duplicate arc");
        }
        for (const auto& [u, v] : arcs_) {
            if (u < v && has_arc(v, u))
                throw std::invalid_argument("OrientedGraph: both orientations of a pair present");
        }
    }

    int vertex_count() const noexcept { return n_; }
    int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }

    /// Sorted lexicographically by (tail, head).
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool has_arc(Vertex u, Vertex v) const {
        return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
    }

    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    std::vector<Vertex> out_neighbors(Vertex v) const {
        std::vector<Vertex> out;
        auto lo = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{v, 0});
        for (; lo != arcs_.end() && lo->first == v; ++lo) out.push_back(lo->second);
        return out;
    }

    std::vector<Vertex> in_neighbors(Vertex v) const {
        std::vector<Vertex> in;
        for (const auto& [u, w] : arcs_)
            if (w == v) in.push_back(u);
        return in;
    }

    int out_degree(Vertex v) const {
        auto lo = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{v, 0});
        auto hi = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{v + 1, 0});
        return static_cast<int>(hi - lo);
    }

    int in_degree(Vertex v) const {
        int d = 0;
        for (const auto& a : arcs_) d += (a.second == v);
        return d;
    }

    friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

private:
    int n_;
    std::vector<Arc> arcs_;
};

/// True iff every two-arc path x->y->z is shortcut by x->z.
inline bool is_transitive(const OrientedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> out(n), in(n);
    for (const auto& [u, v] : g.arcs()) {
        out[u].push_back(v);
        in[v].push_back(u);
    }
    for (Vertex y = 0; y < n; ++y)
        for (Vertex x : in[y])
            for (Vertex z : out[y])
                if (!g.has_arc(x, z)) return false;
    return true;
}

} // namespace otg
