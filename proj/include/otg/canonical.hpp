#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "otg/sequence.hpp"

namespace otg {

/// A maximal nonzero run is a longest stretch of +/- symbols. The run at the
/// very end of the symbol list (if any) sits next to the implicit initial
/// vertex; call it the terminal run. Canonical form: every run lists its
/// pluses before its minuses, and the terminal run has no minus at all.
inline bool is_canonical(const TernarySequence& s) {
    const auto& sym = s.symbols();
    const std::size_t n = sym.size();
    std::size_t i = 0;
    while (i < n) {
        if (sym[i] == Symbol::zero) {
            ++i;
            continue;
        }
        std::size_t j = i;
        bool seen_minus = false;
        while (j < n && sym[j] != Symbol::zero) {
            if (sym[j] == Symbol::minus) seen_minus = true;
            else if (seen_minus) return false;
            ++j;
        }
        if (j == n && seen_minus) return false;
        i = j;
    }
    return true;
}

/// Sorts each run plus-first and rewrites the terminal run's minuses as
/// pluses. The rebuilt graph is isomorphic to the original; repeated
/// application is the identity.
inline TernarySequence canonicalize(const TernarySequence& s) {
    const auto& sym = s.symbols();
    const std::size_t n = sym.size();
    std::vector<Symbol> out(n, Symbol::zero);
    std::size_t i = 0;
    while (i < n) {
        if (sym[i] == Symbol::zero) {
            ++i;
            continue;
        }
        std::size_t j = i;
        std::size_t pluses = 0;
        while (j < n && sym[j] != Symbol::zero) {
            if (sym[j] == Symbol::plus) ++pluses;
            ++j;
        }
        if (j == n) pluses = j - i;
        for (std::size_t k = i; k < j; ++k)
            out[k] = (k - i < pluses) ? Symbol::plus : Symbol::minus;
        i = j;
    }
    return TernarySequence(std::move(out));
}

/// Exchanges the symbols at positions k-1 and k (0-based). Legal only when
/// the two symbols have equal magnitude: both nonzero, or both zero (a
/// no-op). The rebuilt graphs are isomorphic.
inline TernarySequence swap_equal_magnitude(const TernarySequence& s, std::size_t k) {
    if (k == 0 || k >= s.length())
        throw std::invalid_argument("swap_equal_magnitude: position out of range");
    std::vector<Symbol> sym = s.symbols();
    const bool a_zero = sym[k - 1] == Symbol::zero;
    const bool b_zero = sym[k] == Symbol::zero;
    if (a_zero != b_zero)
        throw std::invalid_argument("swap_equal_magnitude: symbols differ in magnitude");
    std::swap(sym[k - 1], sym[k]);
    return TernarySequence(std::move(sym));
}

/// Streams every canonical sequence of a fixed length in lexicographic order
/// (Plus < Minus < Zero). One consumer at a time.
class CanonicalEnumerator {
public:
    explicit CanonicalEnumerator(int vertex_count) {
        if (vertex_count <= 0)
            throw std::domain_error("CanonicalEnumerator: vertex count must be positive");
        len_ = static_cast<std::size_t>(vertex_count) - 1;
        cur_.assign(len_, Symbol::plus);
        done_ = false;
    }

    std::optional<TernarySequence> next() {
        if (done_) return std::nullopt;
        TernarySequence out{std::vector<Symbol>(cur_)};
        advance();
        return out;
    }

private:
    // run_minus = the nonzero run in progress already contains a minus.
    static bool run_minus_after(bool run_minus, Symbol s) {
        if (s == Symbol::zero) return false;
        return run_minus || s == Symbol::minus;
    }

    static bool placeable(bool run_minus, Symbol s) {
        return !(s == Symbol::plus && run_minus);
    }

    // A prefix extends to a canonical word iff a minus-run never has to touch
    // the end: fine when slots remain or the run is minus-free.
    static bool completable(bool run_minus, std::size_t slots_left) {
        return slots_left >= 1 || !run_minus;
    }

    // Lexicographically least completion: all '+' when the run is clean,
    // otherwise '-' until one slot remains, which must close the run with '0'.
    void fill_minimal(std::size_t from, bool run_minus) {
        for (std::size_t i = from; i < len_; ++i) {
            if (!run_minus) cur_[i] = Symbol::plus;
            else if (len_ - i >= 2) cur_[i] = Symbol::minus;
            else cur_[i] = Symbol::zero;
            run_minus = run_minus_after(run_minus, cur_[i]);
        }
    }

    void advance() {
        if (len_ == 0) {
            done_ = true;
            return;
        }
        std::vector<char> state(len_ + 1, 0);
        for (std::size_t i = 0; i < len_; ++i)
            state[i + 1] = run_minus_after(state[i] != 0, cur_[i]) ? 1 : 0;
        for (std::size_t i = len_; i-- > 0;) {
            const bool before = state[i] != 0;
            for (int v = static_cast<int>(cur_[i]) + 1; v <= static_cast<int>(Symbol::zero); ++v) {
                const Symbol cand = static_cast<Symbol>(v);
                if (!placeable(before, cand)) continue;
                const bool after = run_minus_after(before, cand);
                if (!completable(after, len_ - i - 1)) continue;
                cur_[i] = cand;
                fill_minimal(i + 1, after);
                return;
            }
        }
        done_ = true;
    }

    std::size_t len_ = 0;
    std::vector<Symbol> cur_;
    bool done_ = true;
};

/// Materialized enumeration, still in lexicographic order.
inline std::vector<TernarySequence> enumerate_canonical(int vertex_count) {
    CanonicalEnumerator en(vertex_count);
    std::vector<TernarySequence> out;
    while (auto s = en.next()) out.push_back(std::move(*s));
    return out;
}

} // namespace otg
