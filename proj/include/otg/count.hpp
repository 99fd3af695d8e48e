#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "otg/blocks.hpp"
#include "otg/canonical.hpp"
#include "otg/exhaustive.hpp"
#include "otg/isomorphism.hpp"
#include "otg/recognize.hpp"
#include "otg/sequence.hpp"

namespace otg {

using BigInt = boost::multiprecision::cpp_int;

struct ClassCount {
    int n = 0;
    BigInt count;

    friend bool operator==(const ClassCount&, const ClassCount&) = default;
};

/// Isomorphism classes on n vertices: c(1)=1, c(2)=2, c(n)=3c(n-1)-c(n-2).
/// This equals fibonacci(2n-1) under the standard seeds; sources stating the
/// even index use a shifted seed convention.
inline ClassCount count_classes(int n) {
    if (n <= 0) throw std::domain_error("count_classes: vertex count must be positive");
    BigInt prev = 1, cur = 1; // c(0)=1 extends the recurrence: 3*1-1=2=c(2)
    for (int k = 2; k <= n; ++k) {
        BigInt next = 3 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return ClassCount{n, std::move(cur)};
}

/// Standard Fibonacci, F(0)=0, F(1)=1.
inline BigInt fibonacci(int k) {
    if (k < 0) throw std::domain_error("fibonacci: negative index");
    BigInt a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

/// Independent oracle: sweep every loop-free 2-cycle-free digraph on n
/// labeled vertices, keep the members, and bucket them up to isomorphism.
/// The sweep is 3^(n choose 2) graphs, so n is capped hard.
inline ClassCount brute_count_classes(int n) {
    if (n <= 0) throw std::domain_error("brute_count_classes: vertex count must be positive");
    if (n > 5)
        throw std::invalid_argument("brute_count_classes: n > 5 exceeds the brute-force budget");
    std::vector<OrientedGraph> reps;
    for_each_oriented_graph(n, [&](const OrientedGraph& g) {
        if (!recognize(g)) return;
        for (const OrientedGraph& r : reps)
            if (are_isomorphic_bruteforce(g, r)) return;
        reps.push_back(g);
    });
    return ClassCount{n, BigInt(reps.size())};
}

/// Transitive orientation classes of the threshold graph a minus-free
/// sequence describes: one factor p+1 per zero-terminated block, nothing for
/// the run next to the initial vertex.
inline BigInt count_transitive_orientations(const TernarySequence& b) {
    if (has_minus(b))
        throw std::domain_error("count_transitive_orientations: sequence must be minus-free");
    BigInt product = 1;
    for (const Block& blk : to_blocks(b).blocks) product *= blk.plus + 1;
    return product;
}

/// The classes themselves: within each zero-terminated block independently,
/// turn a suffix of the plus run into minuses. Emitted sorted; all results
/// are canonical and pairwise non-isomorphic.
inline std::vector<TernarySequence> enumerate_orientation_classes(const TernarySequence& b) {
    if (has_minus(b))
        throw std::domain_error("enumerate_orientation_classes: sequence must be minus-free");
    const BlockForm form = to_blocks(b);
    std::vector<TernarySequence> out;
    std::vector<int> flip(form.blocks.size(), 0);
    for (;;) {
        BlockForm variant = form;
        for (std::size_t i = 0; i < flip.size(); ++i) {
            variant.blocks[i].plus -= flip[i];
            variant.blocks[i].minus += flip[i];
        }
        out.push_back(from_blocks(variant));
        std::size_t i = 0;
        while (i < flip.size() && flip[i] == form.blocks[i].plus) flip[i++] = 0;
        if (i == flip.size()) break;
        ++flip[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace otg
