#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "total_chroma/error.hpp"

namespace total_chroma {

using VertexId = std::size_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    static constexpr Edge of(VertexId a, VertexId b) noexcept {
        return a < b ? Edge{a, b} : Edge{b, a};
    }

    constexpr bool incident_to(VertexId x) const noexcept { return u == x || v == x; }
    constexpr VertexId other(VertexId x) const noexcept { return x == u ? v : u; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph. Edges are kept sorted, so iteration
/// order (and every serialization derived from it) is deterministic.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `n` vertices. Edge endpoints may be given in any
    /// order; self-loops, duplicates and out-of-range endpoints throw.
    Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {})
        : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
        for (auto& e : edges_) {
            if (e.u == e.v)
                throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
            if (e.u >= n_ || e.v >= n_)
                throw InvalidParameter("edge endpoint out of range");
            e = Edge::of(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw InvalidParameter("duplicate edge");
        if (!labels_.empty() && labels_.size() != n_)
            throw InvalidParameter("label count does not match vertex count");

        adjacency_.assign(n_, {});
        incidence_.assign(n_, {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge e = edges_[i];
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
            incidence_[e.u].push_back(i);
            incidence_[e.v].push_back(i);
        }
        for (auto& row : adjacency_) std::sort(row.begin(), row.end());
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return n_ == 0; }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    /// Indices into edges() of the edges incident to `v`, ascending.
    std::span<const std::size_t> incident_edges(VertexId v) const { return incidence_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

    std::optional<std::size_t> edge_index(VertexId a, VertexId b) const {
        if (a == b || a >= n_ || b >= n_) return std::nullopt;
        const Edge key = Edge::of(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    bool has_edge(VertexId a, VertexId b) const { return edge_index(a, b).has_value(); }

    std::string label(VertexId v) const {
        if (v >= n_) throw InvalidParameter("vertex out of range");
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::vector<std::size_t>> incidence_;
};

/// Coordinates of a vertex of G x H.
struct ProductVertex {
    VertexId g_index = 0;
    VertexId h_index = 0;

    friend constexpr auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

/// Row-major product indexing: (g, h) -> g * |V(H)| + h.
constexpr VertexId product_index(ProductVertex p, std::size_t h_count) noexcept {
    return p.g_index * h_count + p.h_index;
}

constexpr ProductVertex product_vertex(VertexId index, std::size_t h_count) noexcept {
    return {index / h_count, index % h_count};
}

// ---- standard families ----------------------------------------------------

inline Graph cycle(std::size_t n) {
    if (n < 3) throw InvalidParameter("cycle requires n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(n);
    for (VertexId i = 0; i < n; ++i) edges.push_back(Edge::of(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

inline Graph path(std::size_t n) {
    if (n < 1) throw InvalidParameter("path requires n >= 1");
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

inline Graph complete(std::size_t n) {
    if (n < 1) throw InvalidParameter("complete graph requires n >= 1");
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw InvalidParameter("complete bipartite graph requires a, b >= 1");
    std::vector<Edge> edges;
    for (VertexId i = 0; i < a; ++i)
        for (VertexId j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(a + b, std::move(edges));
}

/// Direct (tensor) product: (g,h) ~ (g',h') iff gg' in E(G) and hh' in E(H).
inline Graph direct_product(const Graph& g, const Graph& h) {
    if (g.empty() || h.empty()) throw InvalidParameter("direct product of an empty graph");
    const std::size_t hn = h.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count() * h.edge_count());
    for (const Edge& eg : g.edges()) {
        for (const Edge& eh : h.edges()) {
            edges.push_back(Edge::of(product_index({eg.u, eh.u}, hn), product_index({eg.v, eh.v}, hn)));
            edges.push_back(Edge::of(product_index({eg.u, eh.v}, hn), product_index({eg.v, eh.u}, hn)));
        }
    }
    std::vector<std::string> labels;
    labels.reserve(g.vertex_count() * hn);
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        for (VertexId y = 0; y < hn; ++y) labels.push_back("(" + g.label(x) + "," + h.label(y) + ")");
    return Graph(g.vertex_count() * hn, std::move(edges), std::move(labels));
}

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    std::vector<std::size_t> position(g.vertex_count(), g.vertex_count());
    for (std::size_t i = 0; i < vertices.size(); ++i) position.at(vertices[i]) = i;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (VertexId v : vertices) labels.push_back(g.label(v));
    for (const Edge& e : g.edges())
        if (position[e.u] < vertices.size() && position[e.v] < vertices.size())
            edges.push_back(Edge::of(position[e.u], position[e.v]));
    return Graph(vertices.size(), std::move(edges), std::move(labels));
}

// ---- structural predicates ------------------------------------------------

inline std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

inline bool is_regular(const Graph& g) {
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return true;
}

/// Components in order of their smallest vertex; each list is ascending.
inline std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(g.vertex_count(), false);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> frontier;
        frontier.push(root);
        seen[root] = true;
        while (!frontier.empty()) {
            VertexId x = frontier.front();
            frontier.pop();
            comp.push_back(x);
            for (VertexId y : g.neighbors(x))
                if (!seen[y]) {
                    seen[y] = true;
                    frontier.push(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

struct Bipartition {
    std::vector<VertexId> left;   ///< side containing each component's smallest vertex
    std::vector<VertexId> right;
};

/// BFS 2-coloring; nullopt when an odd cycle exists.
inline std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (side[root] >= 0) continue;
        side[root] = 0;
        std::queue<VertexId> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            VertexId x = frontier.front();
            frontier.pop();
            for (VertexId y : g.neighbors(x)) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    frontier.push(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (VertexId v = 0; v < g.vertex_count(); ++v) (side[v] == 0 ? parts.left : parts.right).push_back(v);
    return parts;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// ---- total graph ----------------------------------------------------------

/// One node per element of `g`: nodes 0..|V|-1 are the vertices, node |V|+i
/// is edges()[i]. Two nodes are adjacent iff the elements are adjacent or
/// incident, so proper k-colorings of the result are k-total colorings of g.
inline Graph total_graph(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge e = g.edge(i);
        edges.push_back({e.u, n + i});
        edges.push_back({e.v, n + i});
    }
    for (VertexId v = 0; v < n; ++v) {
        auto inc = g.incident_edges(v);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) edges.push_back({n + inc[a], n + inc[b]});
    }
    return Graph(n + g.edge_count(), std::move(edges));
}

}  // namespace total_chroma
