#pragma once

// Test-only reference implementations. They work from the definitions on an
// explicit element list and deliberately share no code with the library's
// verifier, total-graph builder or solver.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "total_chroma/coloring.hpp"
#include "total_chroma/graph.hpp"

namespace oracle {

using total_chroma::Color;
using total_chroma::Edge;
using total_chroma::Graph;
using total_chroma::VertexId;

/// A vertex a, or an edge {a, b}.
struct Elem {
    VertexId a;
    VertexId b;
    bool is_edge;
};

inline std::vector<Elem> elements(const Graph& g) {
    std::vector<Elem> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back({v, 0, false});
    for (const Edge& e : g.edges()) out.push_back({e.u, e.v, true});
    return out;
}

/// Adjacent vertices, incident vertex/edge, or edges sharing an endpoint.
inline bool related(const Elem& x, const Elem& y, const Graph& g) {
    if (!x.is_edge && !y.is_edge) {
        for (const Edge& e : g.edges())
            if ((e.u == x.a && e.v == y.a) || (e.u == y.a && e.v == x.a)) return true;
        return false;
    }
    if (x.is_edge && y.is_edge) {
        if (x.a == y.a && x.b == y.b) return false;
        return x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
    }
    const Elem& v = x.is_edge ? y : x;
    const Elem& e = x.is_edge ? x : y;
    return e.a == v.a || e.b == v.a;
}

/// Number of related element pairs sharing a color; colors indexed like elements().
inline std::size_t naive_conflicts(const Graph& g, const std::vector<Color>& colors) {
    const auto el = elements(g);
    std::size_t count = 0;
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j)
            if (colors[i] == colors[j] && related(el[i], el[j], g)) ++count;
    return count;
}

inline std::vector<std::vector<bool>> relation_matrix(const Graph& g) {
    const auto el = elements(g);
    std::vector<std::vector<bool>> rel(el.size(), std::vector<bool>(el.size(), false));
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = 0; j < el.size(); ++j) rel[i][j] = i != j && related(el[i], el[j], g);
    return rel;
}

/// Enumerates all k^(|V|+|E|) assignments; returns the first proper one.
inline std::optional<std::vector<Color>> brute_force_total_coloring(const Graph& g, int k) {
    const auto rel = relation_matrix(g);
    const std::size_t n = rel.size();
    std::vector<Color> colors(n, 1);
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if (rel[i][j] && colors[i] == colors[j]) ok = false;
        if (ok) return colors;
        std::size_t pos = 0;
        while (pos < n && colors[pos] == k) colors[pos++] = 1;
        if (pos == n) return std::nullopt;
        ++colors[pos];
    }
}

inline int brute_force_total_chromatic_number(const Graph& g) {
    for (int k = 1;; ++k)
        if (brute_force_total_coloring(g, k)) return k;
}

/// Random simple graph with n vertices, each pair present with probability p.
inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (coin(rng)) edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

}  // namespace oracle
