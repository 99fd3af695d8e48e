#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "otg/error.hpp"
#include "otg/oriented_graph.hpp"
#include "otg/sequence.hpp"

namespace otg {

/// Grammar: [+-0]* with an optional single trailing '*'. Offsets in errors
/// are 0-based character positions.
inline TernarySequence parse_sequence(const std::string& text) {
    std::vector<Symbol> sym;
    bool star_seen = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (star_seen) throw ParseError("character after '*'", i);
        switch (c) {
            case '+': sym.push_back(Symbol::plus); break;
            case '-': sym.push_back(Symbol::minus); break;
            case '0': sym.push_back(Symbol::zero); break;
            case '*': star_seen = true; break;
            default: throw ParseError(std::string("illegal character '") + c + "'", i);
        }
    }
    return TernarySequence(std::move(sym));
}

/// Minus-free variant for undirected inputs; '1' and '+' both mean a
/// dominating vertex.
inline TernarySequence parse_binary_sequence(const std::string& text) {
    std::vector<Symbol> sym;
    bool star_seen = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (star_seen) throw ParseError("character after '*'", i);
        switch (c) {
            case '1':
            case '+': sym.push_back(Symbol::plus); break;
            case '0': sym.push_back(Symbol::zero); break;
            case '*': star_seen = true; break;
            default: throw ParseError(std::string("illegal character '") + c + "'", i);
        }
    }
    return TernarySequence(std::move(sym));
}

/// Document form: header "otg <n>", then one "u v" line per arc. '#' lines
/// and blank lines are skipped. Errors carry 1-based line numbers.
inline OrientedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<int> n;
    std::vector<Arc> arcs;
    auto significant = [](const std::string& s) {
        for (char c : s)
            if (c != ' ' && c != '\t' && c != '\r') return c != '#';
        return false;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        std::istringstream fields(line);
        if (!n) {
            std::string tag;
            int count = 0;
            if (!(fields >> tag >> count) || tag != "otg")
                throw ParseError("expected header \"otg <n>\"", lineno);
            std::string extra;
            if (fields >> extra) throw ParseError("trailing content after header", lineno);
            if (count <= 0) throw ParseError("vertex count must be positive", lineno);
            n = count;
            continue;
        }
        int u = 0, v = 0;
        if (!(fields >> u >> v)) throw ParseError("expected arc \"u v\"", lineno);
        std::string extra;
        if (fields >> extra) throw ParseError("trailing content after arc", lineno);
        if (u < 0 || u >= *n || v < 0 || v >= *n)
            throw ParseError("arc endpoint out of range", lineno);
        if (u == v) throw ParseError("loop arc", lineno);
        if (std::find(arcs.begin(), arcs.end(), Arc{u, v}) != arcs.end())
            throw ParseError("duplicate arc", lineno);
        if (std::find(arcs.begin(), arcs.end(), Arc{v, u}) != arcs.end())
            throw ParseError("2-cycle", lineno);
        arcs.emplace_back(u, v);
    }
    if (!n) throw ParseError("missing header \"otg <n>\"", lineno + 1);
    return OrientedGraph(*n, std::move(arcs));
}

inline std::string emit_edge_list(const OrientedGraph& g) {
    std::ostringstream out;
    out << "otg " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.arcs()) out << u << " " << v << "\n";
    return out.str();
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace detail

/// Standard dot rendering; every vertex is declared even when isolated.
inline std::string export_dot(const OrientedGraph& g,
                              const std::vector<std::string>& labels = {}) {
    if (!labels.empty() && static_cast<int>(labels.size()) != g.vertex_count())
        throw std::invalid_argument("export_dot: one label per vertex required");
    std::ostringstream out;
    out << "digraph {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (!labels.empty())
            out << " [label=\"" << detail::dot_escape(labels[static_cast<std::size_t>(v)])
                << "\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace otg
