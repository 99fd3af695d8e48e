#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "otg/canonical.hpp"
#include "otg/sequence.hpp"

namespace otg {

/// One zero-terminated block: `plus` pluses, then `minus` minuses, then
/// `zeros` zeros (zeros >= 1).
struct Block {
    int plus = 0;
    int minus = 0;
    int zeros = 0;

    friend bool operator==(const Block&, const Block&) = default;
};

/// Run-length form of a canonical sequence, blocks in reading order, plus the
/// trailing plus-run that sits next to the initial vertex (which never holds
/// a minus and has no zeros after it).
struct BlockForm {
    std::vector<Block> blocks;
    int star_plus = 0;

    friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

/// Run-length encoding; defined exactly on canonical sequences, since only
/// those fit the (+^p -^m 0^z)* +^p0 shape.
inline BlockForm to_blocks(const TernarySequence& s) {
    if (!is_canonical(s))
        throw std::invalid_argument("to_blocks: sequence not in canonical form");
    BlockForm form;
    const auto& sym = s.symbols();
    Block cur;
    for (Symbol x : sym) {
        if (x == Symbol::zero) {
            ++cur.zeros;
        } else if (cur.zeros > 0) {
            form.blocks.push_back(cur);
            cur = Block{};
        }
        if (x == Symbol::plus) ++cur.plus;
        else if (x == Symbol::minus) ++cur.minus;
    }
    if (cur.zeros > 0) {
        form.blocks.push_back(cur);
    } else {
        // Canonical form forbids a terminal minus, so only pluses remain.
        form.star_plus = cur.plus;
    }
    return form;
}

inline TernarySequence from_blocks(const BlockForm& form) {
    std::vector<Symbol> sym;
    for (const Block& b : form.blocks) {
        if (b.plus < 0 || b.minus < 0)
            throw std::invalid_argument("from_blocks: negative symbol count");
        if (b.zeros < 1)
            throw std::invalid_argument("from_blocks: block must end in at least one zero");
        sym.insert(sym.end(), static_cast<std::size_t>(b.plus), Symbol::plus);
        sym.insert(sym.end(), static_cast<std::size_t>(b.minus), Symbol::minus);
        sym.insert(sym.end(), static_cast<std::size_t>(b.zeros), Symbol::zero);
    }
    if (form.star_plus < 0)
        throw std::invalid_argument("from_blocks: negative symbol count");
    sym.insert(sym.end(), static_cast<std::size_t>(form.star_plus), Symbol::plus);
    return TernarySequence(std::move(sym));
}

} // namespace otg
