#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "otg/oriented_graph.hpp"
#include "otg/sequence.hpp"
#include "otg/undirected_graph.hpp"

namespace otg {

/// Signed weight per vertex plus a threshold. Signed weights must be
/// pairwise distinct so that arc orientation is never ambiguous; equal
/// magnitudes of opposite sign (like 5 and -5) are fine.
class WeightRealization {
public:
    WeightRealization(std::vector<long long> weights, long long threshold)
        : weights_(std::move(weights)), threshold_(threshold) {
        if (weights_.empty())
            throw std::invalid_argument("WeightRealization: needs at least one vertex");
        if (threshold_ <= 0)
            throw std::invalid_argument("WeightRealization: threshold must be positive");
        for (long long w : weights_)
            if (w == std::numeric_limits<long long>::min())
                throw std::invalid_argument("WeightRealization: weight magnitude overflows");
        std::vector<long long> sorted = weights_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("WeightRealization: duplicate weight");
    }

    int vertex_count() const noexcept { return static_cast<int>(weights_.size()); }
    const std::vector<long long>& weights() const noexcept { return weights_; }
    long long threshold() const noexcept { return threshold_; }

    friend bool operator==(const WeightRealization&, const WeightRealization&) = default;

private:
    std::vector<long long> weights_;
    long long threshold_;
};

/// Replays the creation record. Vertex v joins at step v+1 reading the
/// sequence from the back; a plus sends arcs to everyone already present, a
/// minus receives arcs from everyone, a zero joins alone.
inline OrientedGraph dtg_build(const TernarySequence& s) {
    const int n = s.vertex_count();
    std::vector<Arc> arcs;
    for (Vertex v = 1; v < n; ++v) {
        switch (s.symbol_for_vertex(v)) {
            case Symbol::plus:
                for (Vertex u = 0; u < v; ++u) arcs.emplace_back(v, u);
                break;
            case Symbol::minus:
                for (Vertex u = 0; u < v; ++u) arcs.emplace_back(u, v);
                break;
            case Symbol::zero:
                break;
        }
    }
    return OrientedGraph(n, std::move(arcs));
}

/// Undirected replay: any nonzero symbol joins as a dominating vertex. Takes
/// any ternary sequence and drops the signs, so it matches the shadow of
/// dtg_build on the same input.
inline UndirectedGraph threshold_build(const TernarySequence& s) {
    const int n = s.vertex_count();
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        if (s.symbol_for_vertex(v) == Symbol::zero) continue;
        for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
    }
    return UndirectedGraph(n, std::move(edges));
}

/// Arc x->y iff |w(x)| + |w(y)| >= t and w(x) > w(y). Magnitude sums are done
/// unsigned so they cannot overflow for any admissible weights.
inline OrientedGraph build_from_weights(const WeightRealization& w) {
    const int n = w.vertex_count();
    const auto& wt = w.weights();
    const auto t = static_cast<unsigned long long>(w.threshold());
    auto mag = [](long long x) { return static_cast<unsigned long long>(x < 0 ? -x : x); };
    std::vector<Arc> arcs;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            if (x == y) continue;
            if (mag(wt[x]) + mag(wt[y]) >= t && wt[x] > wt[y]) arcs.emplace_back(x, y);
        }
    return OrientedGraph(n, std::move(arcs));
}

/// Concrete integer realization with t = 4n: a vertex joining alone at step j
/// gets +(2n-2j+1), a dominating one at step i gets +/-(2n+2i). Lone/lone
/// sums stay below t, dominating pairs always clear it, and a mixed pair
/// clears it exactly when the dominating vertex joined later; no pair sum
/// ever lands on t itself. Rebuilding from the result reproduces the replayed
/// graph label for label.
inline WeightRealization realize_weights(const TernarySequence& s) {
    const int n = s.vertex_count();
    std::vector<long long> w(static_cast<std::size_t>(n));
    w[0] = 2LL * n - 1;
    for (Vertex v = 1; v < n; ++v) {
        const long long step = v + 1;
        switch (s.symbol_for_vertex(v)) {
            case Symbol::zero: w[v] = 2LL * n - 2 * step + 1; break;
            case Symbol::plus: w[v] = 2LL * n + 2 * step; break;
            case Symbol::minus: w[v] = -(2LL * n + 2 * step); break;
        }
    }
    return WeightRealization(std::move(w), 4LL * n);
}

} // namespace otg
