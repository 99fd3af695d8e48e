#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "otg/oriented_graph.hpp"
#include "otg/undirected_graph.hpp"

namespace otg {

/// Set-valued function on vertices, e.g. a neighborhood assignment. Keys and
/// image elements live in a common universe 0..universe-1; image sets are
/// kept sorted and deduplicated.
class NeighborhoodMap {
public:
    NeighborhoodMap(int universe, std::map<Vertex, std::vector<Vertex>> image)
        : universe_(universe), image_(std::move(image)) {
        if (universe_ <= 0)
            throw std::invalid_argument("NeighborhoodMap: universe must be positive");
        for (auto& [v, set] : image_) {
            if (v < 0 || v >= universe_)
                throw std::invalid_argument("NeighborhoodMap: key outside universe");
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
            for (Vertex u : set)
                if (u < 0 || u >= universe_)
                    throw std::invalid_argument("NeighborhoodMap: image vertex outside universe");
        }
    }

    int universe() const noexcept { return universe_; }

    std::vector<Vertex> domain() const {
        std::vector<Vertex> d;
        d.reserve(image_.size());
        for (const auto& [v, set] : image_) d.push_back(v);
        return d;
    }

    bool contains(Vertex v) const { return image_.count(v) != 0; }

    const std::vector<Vertex>& at(Vertex v) const {
        auto it = image_.find(v);
        if (it == image_.end())
            throw std::domain_error("NeighborhoodMap: vertex outside domain");
        return it->second;
    }

private:
    int universe_;
    std::map<Vertex, std::vector<Vertex>> image_;
};

inline NeighborhoodMap total_neighborhood_map(const OrientedGraph& g) {
    std::map<Vertex, std::vector<Vertex>> image;
    for (Vertex v = 0; v < g.vertex_count(); ++v) image[v] = {};
    for (const auto& [u, v] : g.arcs()) {
        image[u].push_back(v);
        image[v].push_back(u);
    }
    return NeighborhoodMap(g.vertex_count(), std::move(image));
}

inline NeighborhoodMap out_neighborhood_map(const OrientedGraph& g) {
    std::map<Vertex, std::vector<Vertex>> image;
    for (Vertex v = 0; v < g.vertex_count(); ++v) image[v] = {};
    for (const auto& [u, v] : g.arcs()) image[u].push_back(v);
    return NeighborhoodMap(g.vertex_count(), std::move(image));
}

inline NeighborhoodMap in_neighborhood_map(const OrientedGraph& g) {
    std::map<Vertex, std::vector<Vertex>> image;
    for (Vertex v = 0; v < g.vertex_count(); ++v) image[v] = {};
    for (const auto& [u, v] : g.arcs()) image[v].push_back(u);
    return NeighborhoodMap(g.vertex_count(), std::move(image));
}

inline NeighborhoodMap neighborhood_map(const UndirectedGraph& g) {
    std::map<Vertex, std::vector<Vertex>> image;
    for (Vertex v = 0; v < g.vertex_count(); ++v) image[v] = {};
    for (const auto& [u, v] : g.edges()) {
        image[u].push_back(v);
        image[v].push_back(u);
    }
    return NeighborhoodMap(g.vertex_count(), std::move(image));
}

namespace detail {

inline bool sorted_subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace detail

/// sigma(x) is contained in sigma(y) together with y itself.
inline bool neighborhood_leq(const NeighborhoodMap& m, Vertex x, Vertex y) {
    const auto& sx = m.at(x);
    const auto& sy = m.at(y);
    for (Vertex z : sx)
        if (z != y && !std::binary_search(sy.begin(), sy.end(), z)) return false;
    return true;
}

/// Proper inclusion sigma(x) in sigma(y), no exemption for the endpoints.
inline bool neighborhood_lt(const NeighborhoodMap& m, Vertex x, Vertex y) {
    const auto& sx = m.at(x);
    const auto& sy = m.at(y);
    return sx.size() < sy.size() && detail::sorted_subset(sx, sy);
}

/// Non-strict mode compares up to the endpoints (sigma(x) within sigma(y)+{y}
/// or the reverse); strict mode demands plain set inclusion one way or the
/// other.
inline bool is_nested_family(const NeighborhoodMap& m, const std::vector<Vertex>& s,
                             bool strict) {
    for (Vertex v : s) (void)m.at(v);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const Vertex x = s[i], y = s[j];
            if (strict) {
                if (!detail::sorted_subset(m.at(x), m.at(y)) &&
                    !detail::sorted_subset(m.at(y), m.at(x)))
                    return false;
            } else {
                if (!neighborhood_leq(m, x, y) && !neighborhood_leq(m, y, x)) return false;
            }
        }
    return true;
}

} // namespace otg
