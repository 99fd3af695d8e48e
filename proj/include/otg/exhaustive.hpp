#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "otg/oriented_graph.hpp"
#include "otg/sequence.hpp"
#include "otg/undirected_graph.hpp"

namespace otg {

/// Visits all 3^length creation sequences of the given length.
template <typename Fn>
void for_each_sequence(int length, Fn&& fn) {
    if (length < 0) throw std::domain_error("for_each_sequence: negative length");
    std::vector<Symbol> sym(static_cast<std::size_t>(length), Symbol::plus);
    for (;;) {
        fn(TernarySequence(sym));
        std::size_t i = 0;
        while (i < sym.size() && sym[i] == Symbol::zero) sym[i++] = Symbol::plus;
        if (i == sym.size()) break;
        sym[i] = static_cast<Symbol>(static_cast<int>(sym[i]) + 1);
    }
}

/// Visits all 3^(n choose 2) loop-free 2-cycle-free digraphs on n labeled
/// vertices: per pair, no arc / forward / backward. Intended for n <= 6.
template <typename Fn>
void for_each_oriented_graph(int n, Fn&& fn) {
    if (n <= 0) throw std::domain_error("for_each_oriented_graph: vertex count must be positive");
    if (n > 7) throw std::invalid_argument("for_each_oriented_graph: n too large to sweep");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<int> choice(pairs.size(), 0);
    for (;;) {
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (choice[i] == 1) arcs.emplace_back(pairs[i].first, pairs[i].second);
            else if (choice[i] == 2) arcs.emplace_back(pairs[i].second, pairs[i].first);
        }
        fn(OrientedGraph(n, std::move(arcs)));
        std::size_t i = 0;
        while (i < choice.size() && choice[i] == 2) choice[i++] = 0;
        if (i == choice.size()) break;
        ++choice[i];
    }
}

/// Visits all 2^(n choose 2) simple graphs on n labeled vertices.
template <typename Fn>
void for_each_undirected_graph(int n, Fn&& fn) {
    if (n <= 0)
        throw std::domain_error("for_each_undirected_graph: vertex count must be positive");
    if (n > 7) throw std::invalid_argument("for_each_undirected_graph: n too large to sweep");
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        fn(UndirectedGraph(n, std::move(edges)));
    }
}

} // namespace otg
