#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "total_chroma/assets.hpp"
#include "total_chroma/coloring.hpp"
#include "total_chroma/graph.hpp"
#include "total_chroma/io.hpp"
#include "total_chroma/quotient.hpp"
#include "total_chroma/solver.hpp"

namespace total_chroma::quotient {

/// Exhaustive refutation of a palette on one connected component.
struct ComponentWitness {
    std::vector<VertexId> vertices;  ///< global vertex ids, ascending
    std::size_t left_part = 0;
    std::size_t right_part = 0;
    std::size_t edge_count = 0;
    int refuted_k = 0;
    std::uint64_t node_count = 0;
    std::uint64_t search_digest = 0;
};

/// Evidence that C_4 x C_4 needs six colors: it splits into two copies of
/// K_{4,4}, each of which the solver shows has no 5-total coloring, and a
/// verified 6-total coloring of the whole product.
struct Type2Certificate {
    std::size_t m = 4;
    std::size_t n = 4;
    std::vector<ComponentWitness> components;
    TotalColoring coloring;
};

enum class Route { Merge, StoredAsset };

struct CycleProductColoring {
    TotalColoring coloring;  ///< 5-total coloring of C_m x C_n in the caller's orientation
    Route route = Route::Merge;
    bool swapped = false;       ///< built on C_n x C_m and transposed back
    Decomposition decomposition;  ///< meaningful for Route::Merge
};

using CycleProductResult = std::variant<CycleProductColoring, Type2Certificate>;

/// Maps a coloring of C_m x C_n onto C_n x C_m via (i, j) -> (j, i).
inline TotalColoring transpose(const TotalColoring& tc, std::size_t m, std::size_t n) {
    if (tc.vertex_colors().size() != m * n) throw InvalidParameter("coloring size does not match m x n");
    auto swap_index = [&](VertexId v) { return (v % n) * m + v / n; };
    std::vector<Color> vc(m * n);
    for (VertexId v = 0; v < m * n; ++v) vc[swap_index(v)] = tc.vertex_color(v);
    std::map<Edge, Color> ec;
    for (const auto& [e, c] : tc.edge_colors()) ec.emplace(Edge::of(swap_index(e.u), swap_index(e.v)), c);
    return TotalColoring(tc.palette_size(), std::move(vc), std::move(ec));
}

inline Type2Certificate c4xc4_certificate() {
    const Graph g = direct_product(cycle(4), cycle(4));
    Type2Certificate cert;
    std::vector<Color> vc(g.vertex_count(), kUncolored);
    std::map<Edge, Color> ec;
    for (const auto& comp : connected_components(g)) {
        const Graph h = induced_subgraph(g, comp);
        const auto parts = bipartition(h);
        if (!parts || parts->left.size() != 4 || parts->right.size() != 4 || h.edge_count() != 16)
            throw std::logic_error("C4 x C4 component is not K_{4,4}");
        const auto refuted = solver::has_k_total_coloring(h, 5);
        if (!refuted.exhausted()) throw std::logic_error("K_{4,4} unexpectedly admits a 5-total coloring");
        const auto found = solver::has_k_total_coloring(h, 6);
        if (!found.found()) throw std::logic_error("no 6-total coloring found for K_{4,4}");

        cert.components.push_back({comp, parts->left.size(), parts->right.size(), h.edge_count(), 5,
                                   refuted.node_count, refuted.search_digest});
        for (VertexId v = 0; v < comp.size(); ++v) vc[comp[v]] = found.witness->vertex_color(v);
        for (const auto& [e, c] : found.witness->edge_colors()) ec.emplace(Edge::of(comp[e.u], comp[e.v]), c);
    }
    if (cert.components.size() != 2) throw std::logic_error("C4 x C4 should have two components");
    cert.coloring = TotalColoring(6, std::move(vc), std::move(ec));
    if (!verify_total_coloring(g, cert.coloring).valid) throw std::logic_error("assembled 6-total coloring is invalid");
    return cert;
}

/// Minimum total coloring of C_m x C_n: a 5-total coloring for every pair
/// except (4, 4), which gets a Type2Certificate instead. The result is
/// always verified before it is returned.
inline CycleProductResult color_cm_cn(std::size_t m, std::size_t n,
                                      const std::filesystem::path& asset_dir = assets::default_asset_dir()) {
    if (m < 3 || n < 3) throw InvalidParameter("C_m x C_n needs m, n >= 3");
    if (m == 4 && n == 4) return c4xc4_certificate();

    CycleProductColoring out;
    if (assets::is_small_case(m, n)) {
        out.route = Route::StoredAsset;
        out.swapped = m > n;
        const TotalColoring stored = assets::load_small_case(std::min(m, n), std::max(m, n), asset_dir);
        out.coloring = out.swapped ? transpose(stored, n, m) : stored;
    } else {
        auto excluded = [](std::size_t x) { return x == 3 || x == 4 || x == 7; };
        out.swapped = excluded(m);
        const std::size_t rows = out.swapped ? n : m, cols = out.swapped ? m : n;
        out.route = Route::Merge;
        out.decomposition = decompose(rows);
        const TotalColoring built = expand(merged_coloring(rows), rows, cols);
        out.coloring = out.swapped ? transpose(built, rows, cols) : built;
    }
    const Graph g = direct_product(cycle(m), cycle(n));
    if (!verify_total_coloring(g, out.coloring).valid)
        throw std::logic_error("constructed coloring of C" + std::to_string(m) + " x C" + std::to_string(n) + " is invalid");
    return out;
}

inline io::Json to_json(const Type2Certificate& cert) {
    io::Json comps = io::Json::array();
    for (const auto& c : cert.components)
        comps.push_back({{"vertices", c.vertices},
                         {"parts", {c.left_part, c.right_part}},
                         {"edges", c.edge_count},
                         {"refuted_k", c.refuted_k},
                         {"node_count", c.node_count},
                         {"search_digest", c.search_digest}});
    return io::Json{{"m", cert.m},
                    {"n", cert.n},
                    {"verdict", "Type2"},
                    {"chi_t", cert.coloring.palette_size()},
                    {"components", std::move(comps)},
                    {"coloring", io::to_json(cert.coloring)}};
}

}  // namespace total_chroma::quotient
