#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace otg {

/// Enumerator order fixes the lexicographic order used everywhere: Plus <
/// Minus < Zero.
enum class Symbol { plus = 0, minus = 1, zero = 2 };

inline char to_char(Symbol s) {
    switch (s) {
        case Symbol::plus: return '+';
        case Symbol::minus: return '-';
        case Symbol::zero: return '0';
    }
    throw std::invalid_argument("to_char: bad symbol");
}

/// Creation record of a graph, most recently added vertex first. The initial
/// vertex is implicit and never stored, so a graph on n vertices has a
/// sequence of length n-1. Rendered form appends '*' for it, e.g. "+-0-*".
class TernarySequence {
public:
    TernarySequence() = default;
    explicit TernarySequence(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    std::size_t length() const noexcept { return symbols_.size(); }
    int vertex_count() const noexcept { return static_cast<int>(symbols_.size()) + 1; }

    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    Symbol operator[](std::size_t i) const { return symbols_.at(i); }

    /// Symbol recorded when vertex v joined. Vertex v is the (v+1)-th added,
    /// and position 0 holds the last addition, so this reads from the back.
    /// v = 0 is the implicit initial vertex and has no symbol.
    Symbol symbol_for_vertex(int v) const {
        if (v <= 0 || v >= vertex_count())
            throw std::domain_error("symbol_for_vertex: vertex has no creation symbol");
        return symbols_[symbols_.size() - static_cast<std::size_t>(v)];
    }

    std::string str() const {
        std::string out;
        out.reserve(symbols_.size() + 1);
        for (Symbol s : symbols_) out.push_back(to_char(s));
        out.push_back('*');
        return out;
    }

    friend bool operator==(const TernarySequence&, const TernarySequence&) = default;
    friend auto operator<=>(const TernarySequence&, const TernarySequence&) = default;

private:
    std::vector<Symbol> symbols_;
};

/// Drops signs: Minus becomes Plus, Zero stays. The result records the same
/// additions with direction forgotten.
inline TernarySequence magnitudes(const TernarySequence& s) {
    std::vector<Symbol> out;
    out.reserve(s.length());
    for (Symbol x : s.symbols()) out.push_back(x == Symbol::zero ? Symbol::zero : Symbol::plus);
    return TernarySequence(std::move(out));
}

inline bool has_minus(const TernarySequence& s) {
    for (Symbol x : s.symbols())
        if (x == Symbol::minus) return true;
    return false;
}

} // namespace otg
