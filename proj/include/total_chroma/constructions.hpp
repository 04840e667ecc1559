#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "total_chroma/coloring.hpp"
#include "total_chroma/family.hpp"
#include "total_chroma/graph.hpp"
#include "total_chroma/solver.hpp"

namespace total_chroma::constructions {

// ---- G x K2 lift ------------------------------------------------------------

/// Pulls a total coloring of G back along the projection G x K2 -> G:
/// (x, i) gets f(x) and (x, i)(y, 1-i) gets f(xy). Since Delta(G x K2) =
/// Delta(G), a (Delta+1)-coloring stays a (Delta+1)-coloring.
inline TotalColoring lift_to_k2(const Graph& g, const TotalColoring& f) {
    if (!verify_total_coloring(g, f).valid) throw InvalidParameter("input is not a valid total coloring");
    const std::size_t n = g.vertex_count();
    std::vector<Color> vc(2 * n);
    for (VertexId x = 0; x < n; ++x) vc[2 * x] = vc[2 * x + 1] = f.vertex_color(x);
    std::map<Edge, Color> ec;
    for (const Edge& e : g.edges()) {
        const Color c = f.edge_color(e);
        ec.emplace(Edge::of(product_index({e.u, 0}, 2), product_index({e.v, 1}, 2)), c);
        ec.emplace(Edge::of(product_index({e.u, 1}, 2), product_index({e.v, 0}, 2)), c);
    }
    return TotalColoring(f.palette_size(), std::move(vc), std::move(ec));
}

// ---- conformable products -----------------------------------------------------

enum class ParityCase { Even, Odd };

/// Bookkeeping for the odd-order product coloring.
struct ConformableProductPlan {
    std::vector<std::vector<VertexId>> f_classes;  ///< F_1..F_{Delta(G)+1}, vertices of G
    std::vector<VertexId> u_anchors;               ///< u_i in F_i, i = 1..Delta(G); odd case only
    std::vector<std::vector<VertexId>> a_sets;     ///< A_i as product vertex ids; odd case only
    ParityCase parity_case = ParityCase::Even;

    std::size_t removed_count() const {
        std::size_t total = 0;
        for (const auto& a : a_sets) total += a.size();
        return total;
    }
};

struct ConformableProduct {
    ConformableColoring coloring;
    ConformableProductPlan plan;
};

/// Conformable coloring of G x H with Delta(G)*Delta(H)+1 colors, built from
/// a conformable coloring f of G.
///
/// Even order: (x, a) keeps f(x); the extra colors stay empty.
/// Odd order: both degrees are even. For i <= Delta(G)/2 the class F_i x V(H)
/// gives up Delta(H)-2 vertices, for Delta(G)/2 < i <= Delta(G) it gives up
/// Delta(H), always vertices (u_i, v_1), (u_i, v_2), ... with u_i the lowest
/// vertex of F_i. Each removed vertex becomes a singleton class. Removing an
/// even number keeps each class odd, and the Delta(G)(Delta(H)-1) singletons
/// bring the class count to exactly Delta(G)*Delta(H)+1.
inline ConformableProduct conformable_product(const Graph& g, const Graph& h, const ConformableColoring& f) {
    if (!is_regular(g) || !is_regular(h)) throw InvalidParameter("both factors must be regular");
    const std::size_t dg = max_degree(g), dh = max_degree(h);
    if (dg == 0 || dh == 0) throw InvalidParameter("factors must have at least one edge");
    if (f.palette_size() != static_cast<int>(dg) + 1 || f.vertex_colors().size() != g.vertex_count() || !is_conformable(g, f))
        throw InvalidParameter("f is not a conformable (Delta(G)+1)-coloring of G");

    const std::size_t hn = h.vertex_count();
    const int palette = static_cast<int>(dg * dh) + 1;
    ConformableProductPlan plan;
    plan.f_classes = f.classes();

    std::vector<Color> colors(g.vertex_count() * hn);
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        for (VertexId a = 0; a < hn; ++a) colors[product_index({x, a}, hn)] = f.vertex_colors()[x];

    if (g.vertex_count() % 2 == 0 || hn % 2 == 0) {
        plan.parity_case = ParityCase::Even;
        return {ConformableColoring(palette, std::move(colors)), std::move(plan)};
    }

    plan.parity_case = ParityCase::Odd;
    Color next = static_cast<Color>(dg) + 2;
    for (std::size_t i = 1; i <= dg; ++i) {
        const VertexId u = plan.f_classes[i - 1].front();  // odd classes are nonempty
        const std::size_t removed = i <= dg / 2 ? dh - 2 : dh;
        plan.u_anchors.push_back(u);
        std::vector<VertexId> a_set;
        for (VertexId v = 0; v < removed; ++v) {
            const VertexId p = product_index({u, v}, hn);
            a_set.push_back(p);
            colors[p] = next++;
        }
        plan.a_sets.push_back(std::move(a_set));
    }
    return {ConformableColoring(palette, std::move(colors)), std::move(plan)};
}

// ---- Type classification ------------------------------------------------------

enum class Verdict { Type1, Type2, Unknown };
enum class Source { ConstructiveCertificate, SolverCertificate, LiteratureRule };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Type1: return "Type1";
        case Verdict::Type2: return "Type2";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

inline const char* to_string(Source s) {
    switch (s) {
        case Source::ConstructiveCertificate: return "constructive-certificate";
        case Source::SolverCertificate: return "solver-certificate";
        case Source::LiteratureRule: return "literature-rule";
    }
    return "?";
}

struct Classification {
    Verdict verdict = Verdict::Unknown;
    Source source = Source::LiteratureRule;
    std::string rule_id;
    /// How to re-check a constructive or solver verdict; empty for lookups.
    std::string certificate_ref;
};

namespace detail {

inline Classification rule(bool type1, std::string id) {
    return {type1 ? Verdict::Type1 : Verdict::Type2, Source::LiteratureRule, std::move(id), {}};
}

inline std::optional<Classification> classify_pair(const Factor& x, const Factor& y) {
    using K = Factor::Kind;
    if (x.kind == K::Cycle && y.kind == K::Cycle) return rule(!(x.a == 4 && y.a == 4), "cycle-x-cycle");
    if (x.kind == K::Cycle && y.kind == K::Complete && y.a == 2) return rule(x.a % 3 == 0, "cycle-x-k2");
    if (x.kind == K::CompleteBipartite && y.kind == K::CompleteBipartite)
        return rule(!(x.a == x.b && y.a == y.b), "biclique-x-biclique");
    if (x.kind == K::Complete && y.kind == K::Complete) return rule(!(x.a == 2 && y.a == 2), "complete-x-complete");
    if (x.kind == K::Path && y.kind == K::Path && x.a >= 3 && y.a >= 3) return rule(true, "path-x-path");
    if (x.kind == K::Path && y.kind == K::Cycle && x.a >= 3) return rule(true, "path-x-cycle");
    return std::nullopt;
}

}  // namespace detail

/// Type of a listed product family from established results. Families
/// outside the list are Unknown.
inline Classification classify_known_products(const FamilyDescriptor& d) {
    if (d.factors.size() == 1) {
        const Factor& f = d.factors[0];
        if (f.kind == Factor::Kind::Cycle) return detail::rule(f.a % 3 == 0, "cycle");
    } else if (d.factors.size() == 2) {
        if (auto c = detail::classify_pair(d.factors[0], d.factors[1])) return *c;
        if (auto c = detail::classify_pair(d.factors[1], d.factors[0])) return *c;
    } else {
        throw InvalidParameter("descriptor must have one or two factors");
    }
    return {Verdict::Unknown, Source::LiteratureRule, "none", {}};
}

/// G x H is Type 1 when G is Type 1 and H is bipartite. The caller supplies a
/// (Delta(G)+1)-total coloring of G as evidence; H's bipartition is checked
/// here. No coloring of the product is produced.
inline Classification classify_with_bipartite_factor(const Graph& g, const TotalColoring& type1_witness, const Graph& h) {
    const bool witness_ok = type1_witness.palette_size() == static_cast<int>(max_degree(g)) + 1 &&
                            verify_total_coloring(g, type1_witness).valid;
    if (!witness_ok || !is_bipartite(h)) return {Verdict::Unknown, Source::LiteratureRule, "none", {}};
    return {Verdict::Type1, Source::LiteratureRule, "type1-x-bipartite", {}};
}

/// Verdict from the exact solver: chi_T = Delta+1 or Delta+2.
inline Classification classify_by_solver(const Graph& g, const solver::SolverOptions& options = {}) {
    const auto r = solver::exact_total_chromatic_number(g, options);
    const int delta = static_cast<int>(max_degree(g));
    Classification c;
    c.source = Source::SolverCertificate;
    c.rule_id = "exact-search";
    c.verdict = r.chi_t == delta + 1 ? Verdict::Type1 : r.chi_t == delta + 2 ? Verdict::Type2 : Verdict::Unknown;
    c.certificate_ref = "chi_t=" + std::to_string(r.chi_t);
    for (const auto& p : r.probes)
        c.certificate_ref += " k" + std::to_string(p.k) + ":" + solver::to_string(p.outcome) + "/" + std::to_string(p.node_count);
    return c;
}

}  // namespace total_chroma::constructions
