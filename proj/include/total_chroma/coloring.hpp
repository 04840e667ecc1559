#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "total_chroma/error.hpp"
#include "total_chroma/graph.hpp"

namespace total_chroma {

/// Palette colors are 1-based; 0 means "uncolored" in partial solver states.
using Color = int;
inline constexpr Color kUncolored = 0;

/// Colors for every vertex and edge of some graph, drawn from 1..palette_size.
/// The graph is not stored; verify_total_coloring checks coverage against one.
class TotalColoring {
public:
    TotalColoring() = default;
    TotalColoring(int palette_size, std::vector<Color> vertex_colors, std::map<Edge, Color> edge_colors)
        : k_(palette_size), vertex_colors_(std::move(vertex_colors)), edge_colors_(std::move(edge_colors)) {
        if (k_ < 1) throw InvalidParameter("palette size must be positive");
    }

    int palette_size() const noexcept { return k_; }
    std::span<const Color> vertex_colors() const noexcept { return vertex_colors_; }
    const std::map<Edge, Color>& edge_colors() const noexcept { return edge_colors_; }

    Color vertex_color(VertexId v) const { return vertex_colors_.at(v); }
    Color edge_color(Edge e) const {
        auto it = edge_colors_.find(Edge::of(e.u, e.v));
        if (it == edge_colors_.end()) throw MalformedColoring("edge has no color");
        return it->second;
    }

    /// Same assignment over a larger palette.
    TotalColoring with_palette(int palette_size) const {
        return TotalColoring(palette_size, vertex_colors_, edge_colors_);
    }

    friend bool operator==(const TotalColoring&, const TotalColoring&) = default;

private:
    int k_ = 1;
    std::vector<Color> vertex_colors_;
    std::map<Edge, Color> edge_colors_;
};

/// A vertex or an edge of a graph.
struct Element {
    enum class Kind : std::uint8_t { Vertex, Edge };
    Kind kind = Kind::Vertex;
    VertexId a = 0;
    VertexId b = 0;  ///< unused for vertices

    static Element vertex(VertexId v) { return {Kind::Vertex, v, 0}; }
    static Element edge(Edge e) { return {Kind::Edge, e.u, e.v}; }

    std::string to_string() const {
        return kind == Kind::Vertex ? "v" + std::to_string(a)
                                    : "e{" + std::to_string(a) + "," + std::to_string(b) + "}";
    }

    friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

struct Conflict {
    Element first;
    Element second;
    Color color = kUncolored;

    friend constexpr auto operator<=>(const Conflict&, const Conflict&) = default;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Conflict> conflicts;
};

/// Throws MalformedColoring unless `tc` colors exactly the elements of `g`
/// with colors in 1..palette_size.
inline void require_coverage(const Graph& g, const TotalColoring& tc) {
    const int k = tc.palette_size();
    if (tc.vertex_colors().size() != g.vertex_count())
        throw MalformedColoring("coloring has " + std::to_string(tc.vertex_colors().size()) +
                                " vertex colors, graph has " + std::to_string(g.vertex_count()) + " vertices");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Color c = tc.vertex_color(v);
        if (c < 1 || c > k) throw MalformedColoring("vertex " + std::to_string(v) + " color outside 1.." + std::to_string(k));
    }
    if (tc.edge_colors().size() != g.edge_count())
        throw MalformedColoring("coloring has " + std::to_string(tc.edge_colors().size()) +
                                " edge colors, graph has " + std::to_string(g.edge_count()) + " edges");
    auto it = tc.edge_colors().begin();
    for (const Edge& e : g.edges()) {
        // both sequences are sorted, so a mismatch is a missing or foreign edge
        if (it->first != e) throw MalformedColoring("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} has no color");
        if (it->second < 1 || it->second > k) throw MalformedColoring("edge color outside palette");
        ++it;
    }
}

/// Lists every pair of adjacent or incident elements sharing a color.
inline ValidationReport verify_total_coloring(const Graph& g, const TotalColoring& tc) {
    require_coverage(g, tc);
    ValidationReport report;
    for (const Edge& e : g.edges()) {
        const Color cu = tc.vertex_color(e.u), cv = tc.vertex_color(e.v), ce = tc.edge_color(e);
        if (cu == cv) report.conflicts.push_back({Element::vertex(e.u), Element::vertex(e.v), cu});
        if (ce == cu) report.conflicts.push_back({Element::vertex(e.u), Element::edge(e), ce});
        if (ce == cv) report.conflicts.push_back({Element::vertex(e.v), Element::edge(e), ce});
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto inc = g.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                const Edge e1 = g.edge(inc[i]), e2 = g.edge(inc[j]);
                if (tc.edge_color(e1) == tc.edge_color(e2))
                    report.conflicts.push_back({Element::edge(e1), Element::edge(e2), tc.edge_color(e1)});
            }
    }
    report.valid = report.conflicts.empty();
    return report;
}

inline bool is_valid_total_coloring(const Graph& g, const TotalColoring& tc) {
    return verify_total_coloring(g, tc).valid;
}

// ---- total graph correspondence -------------------------------------------

/// Flattens `tc` into a vertex coloring of total_graph(g).
inline std::vector<Color> to_total_graph_colors(const Graph& g, const TotalColoring& tc) {
    require_coverage(g, tc);
    std::vector<Color> out(tc.vertex_colors().begin(), tc.vertex_colors().end());
    for (const Edge& e : g.edges()) out.push_back(tc.edge_color(e));
    return out;
}

/// Inverse of to_total_graph_colors.
inline TotalColoring from_total_graph_colors(const Graph& g, int palette_size, std::span<const Color> colors) {
    if (colors.size() != g.vertex_count() + g.edge_count())
        throw MalformedColoring("total graph coloring has the wrong length");
    std::vector<Color> vc(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(g.vertex_count()));
    std::map<Edge, Color> ec;
    for (std::size_t i = 0; i < g.edge_count(); ++i) ec.emplace(g.edge(i), colors[g.vertex_count() + i]);
    return TotalColoring(palette_size, std::move(vc), std::move(ec));
}

// ---- vertex colorings -----------------------------------------------------

inline bool is_proper_vertex_coloring(const Graph& g, std::span<const Color> colors) {
    if (colors.size() != g.vertex_count()) throw MalformedColoring("one color per vertex required");
    for (const Edge& e : g.edges())
        if (colors[e.u] == colors[e.v]) return false;
    return true;
}

/// Vertex coloring together with its color-class sizes.
class ConformableColoring {
public:
    ConformableColoring(int palette_size, std::vector<Color> vertex_colors)
        : palette_(palette_size), colors_(std::move(vertex_colors)), class_sizes_(static_cast<std::size_t>(std::max(palette_size, 0)), 0) {
        if (palette_ < 1) throw InvalidParameter("palette size must be positive");
        for (Color c : colors_) {
            if (c < 1 || c > palette_) throw MalformedColoring("vertex color outside 1.." + std::to_string(palette_));
            ++class_sizes_[static_cast<std::size_t>(c - 1)];
        }
    }

    /// Class i (0-based) receives color i+1.
    static ConformableColoring from_classes(std::size_t vertex_count, int palette_size,
                                            const std::vector<std::vector<VertexId>>& classes) {
        if (classes.size() > static_cast<std::size_t>(palette_size)) throw InvalidParameter("more classes than colors");
        std::vector<Color> colors(vertex_count, kUncolored);
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (VertexId v : classes[c]) {
                if (v >= vertex_count || colors[v] != kUncolored) throw MalformedColoring("classes do not partition the vertices");
                colors[v] = static_cast<Color>(c + 1);
            }
        for (Color c : colors)
            if (c == kUncolored) throw MalformedColoring("classes do not cover every vertex");
        return ConformableColoring(palette_size, std::move(colors));
    }

    int palette_size() const noexcept { return palette_; }
    std::span<const Color> vertex_colors() const noexcept { return colors_; }
    /// class_sizes()[c-1] is the number of vertices colored c.
    std::span<const std::size_t> class_sizes() const noexcept { return class_sizes_; }

    std::vector<std::vector<VertexId>> classes() const {
        std::vector<std::vector<VertexId>> out(class_sizes_.size());
        for (VertexId v = 0; v < colors_.size(); ++v) out[static_cast<std::size_t>(colors_[v] - 1)].push_back(v);
        return out;
    }

    friend bool operator==(const ConformableColoring&, const ConformableColoring&) = default;

private:
    int palette_;
    std::vector<Color> colors_;
    std::vector<std::size_t> class_sizes_;
};

/// Proper, and every one of the palette's classes (empty ones included) has
/// the parity of |V(G)|. G must be regular.
inline bool is_conformable(const Graph& g, const ConformableColoring& cc) {
    if (!is_regular(g)) throw InvalidParameter("conformability is defined for regular graphs");
    if (!is_proper_vertex_coloring(g, cc.vertex_colors())) return false;
    const std::size_t parity = g.vertex_count() % 2;
    for (std::size_t size : cc.class_sizes())
        if (size % 2 != parity) return false;
    return true;
}

/// Backtracking search for a conformable (Delta+1)-coloring of a small
/// regular graph. Colors are introduced in increasing order.
inline std::optional<ConformableColoring> find_conformable_coloring(const Graph& g) {
    if (!is_regular(g)) throw InvalidParameter("conformability is defined for regular graphs");
    const int palette = static_cast<int>(max_degree(g)) + 1;
    const std::size_t n = g.vertex_count();
    std::vector<Color> colors(n, kUncolored);
    std::optional<ConformableColoring> found;

    auto recurse = [&](auto& self, VertexId v, int used) -> bool {
        if (v == n) {
            ConformableColoring cc(palette, colors);
            if (!is_conformable(g, cc)) return false;
            found = std::move(cc);
            return true;
        }
        for (Color c = 1; c <= std::min(palette, used + 1); ++c) {
            bool clash = false;
            for (VertexId w : g.neighbors(v))
                if (colors[w] == c) { clash = true; break; }
            if (clash) continue;
            colors[v] = c;
            if (self(self, v + 1, std::max(used, c))) return true;
            colors[v] = kUncolored;
        }
        return false;
    };
    recurse(recurse, 0, 0);
    return found;
}

}  // namespace total_chroma
