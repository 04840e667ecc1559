// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "total_chroma/total_chroma.hpp"

using namespace total_chroma;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Check cycle_product_sweep() {
    Check c;
    for (std::size_t m = 3; m <= 20; ++m)
        for (std::size_t n = 3; n <= 20; ++n) {
            if (m == 4 && n == 4) continue;
            const auto r = quotient::color_cm_cn(m, n);
            const auto* built = std::get_if<quotient::CycleProductColoring>(&r);
            const std::string tag = "C" + std::to_string(m) + " x C" + std::to_string(n);
            c.expect(built != nullptr, tag + " returned a certificate");
            if (!built) continue;
            const Graph g = direct_product(cycle(m), cycle(n));
            c.expect(built->coloring.palette_size() == 5 && max_degree(g) + 1 == 5, tag + " palette is not Delta+1");
            c.expect(verify_total_coloring(g, built->coloring).valid, tag + " coloring rejected");
        }
    return c;
}

Check merge_range() {
    Check c;
    for (std::size_t m = 5; m <= 200; ++m) {
        if (m == 7) continue;
        bool valid = false;
        try {
            valid = quotient::merged_coloring(m).is_valid();
        } catch (const std::logic_error&) {
        }
        c.expect(valid, "merged coloring invalid at m=" + std::to_string(m));
    }
    return c;
}

Check base_tables() {
    using V = std::vector<Color>;
    struct Table {
        std::size_t b;
        V i, m, mp;
    };
    const std::vector<Table> expected{
        {5, {1, 2, 3, 4, 5}, {3, 1, 2, 1, 2}, {5, 4, 5, 3, 4}},
        {6, {1, 2, 3, 1, 2, 3}, {3, 1, 2, 3, 1, 2}, {5, 4, 5, 4, 5, 4}},
        {8, {1, 2, 3, 4, 2, 1, 4, 3}, {3, 1, 2, 1, 4, 2, 1, 2}, {5, 4, 5, 3, 5, 3, 5, 4}},
        {9, {1, 2, 3, 1, 2, 4, 1, 2, 5}, {3, 1, 2, 3, 1, 2, 4, 1, 2}, {5, 4, 5, 4, 5, 3, 5, 3, 4}},
        {12, {1, 2, 3, 1, 5, 4, 1, 3, 2, 1, 4, 5}, {3, 1, 2, 3, 1, 3, 2, 1, 3, 2, 1, 2}, {5, 4, 5, 4, 2, 5, 4, 5, 4, 5, 3, 4}},
    };
    Check c;
    for (const auto& t : expected) {
        const auto qc = quotient::base_coloring(t.b);
        const std::string tag = "b=" + std::to_string(t.b);
        c.expect(qc.i_colors() == t.i && qc.m_colors() == t.m && qc.mprime_colors() == t.mp, tag + " differs");
        c.expect(qc.is_valid(), tag + " not quotient-valid");
    }
    return c;
}

Check c4xc4_type2() {
    Check c;
    const Graph g = direct_product(cycle(4), cycle(4));
    const auto comps = connected_components(g);
    c.expect(comps.size() == 2, "expected two components");
    for (const auto& comp : comps) {
        const Graph h = induced_subgraph(g, comp);
        const auto parts = bipartition(h);
        c.expect(parts && parts->left.size() == 4 && parts->right.size() == 4 && h.edge_count() == 16,
                 "component is not K4,4");
        const auto five = solver::has_k_total_coloring(h, 5, {.jobs = 1});
        c.expect(five.exhausted(), std::string("K4,4 at k=5: ") + solver::to_string(five.outcome));
        const auto six = solver::has_k_total_coloring(h, 6, {.jobs = 1});
        c.expect(six.found() && verify_total_coloring(h, *six.witness).valid, "K4,4 at k=6 not found");
    }
    const auto r = quotient::color_cm_cn(4, 4);
    const auto* cert = std::get_if<quotient::Type2Certificate>(&r);
    c.expect(cert && cert->components.size() == 2 && cert->coloring.palette_size() == 6 &&
                 verify_total_coloring(g, cert->coloring).valid,
             "C4 x C4 certificate missing or invalid");
    return c;
}

Check small_cases() {
    Check c;
    for (auto sc : assets::kSmallCases) {
        const Graph g = direct_product(cycle(sc.m), cycle(sc.n));
        const auto r = solver::has_k_total_coloring(g, 5, {.jobs = 1});
        const std::string tag = "C" + std::to_string(sc.m) + " x C" + std::to_string(sc.n);
        c.expect(r.found() && verify_total_coloring(g, *r.witness).valid, tag + " not solved at k=5");
        c.expect(max_degree(g) + 1 == 5, tag + " Delta+1 != 5");
        c.expect(verify_total_coloring(g, assets::load_small_case(sc.m, sc.n)).valid, tag + " stored asset invalid");
    }
    return c;
}

Check cycle_rule() {
    Check c;
    for (std::size_t n = 3; n <= 12; ++n) {
        const auto r = solver::exact_total_chromatic_number(cycle(n));
        c.expect(r.chi_t == (n % 3 == 0 ? 3 : 4), "chi_T(C" + std::to_string(n) + ") = " + std::to_string(r.chi_t));
    }
    return c;
}

Check k2_lift() {
    Check c;
    const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    const std::vector<std::pair<std::string, Graph>> graphs{{"C3", cycle(3)}, {"C6", cycle(6)}, {"C9", cycle(9)}, {"prism", prism}};
    for (const auto& [name, g] : graphs) {
        const auto r = solver::exact_total_chromatic_number(g);
        c.expect(r.chi_t == static_cast<int>(max_degree(g)) + 1, name + " is not Type 1");
        const TotalColoring lifted = constructions::lift_to_k2(g, r.witness);
        c.expect(lifted.palette_size() == r.chi_t && verify_total_coloring(direct_product(g, complete(2)), lifted).valid,
                 name + " lift rejected");
    }
    return c;
}

Check conformable_products() {
    Check c;
    auto mod3 = [](std::size_t n) {
        std::vector<Color> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Color>(i % 3) + 1;
        return ConformableColoring(3, std::move(v));
    };
    for (std::size_t gn : {3u, 6u, 9u}) {
        const Graph g = cycle(gn);
        const ConformableColoring f = mod3(gn);
        c.expect(is_conformable(g, f), "committed coloring of C" + std::to_string(gn) + " not conformable");
        for (std::size_t hn = 3; hn <= 9; ++hn) {
            const Graph h = cycle(hn);
            const auto p = constructions::conformable_product(g, h, f);
            const Graph gh = direct_product(g, h);
            const std::string tag = "C" + std::to_string(gn) + " x C" + std::to_string(hn);
            c.expect(p.coloring.palette_size() == static_cast<int>(max_degree(g) * max_degree(h)) + 1, tag + " palette");
            c.expect(is_conformable(gh, p.coloring), tag + " not conformable");
            if (p.plan.parity_case == constructions::ParityCase::Odd)
                c.expect(p.plan.removed_count() == max_degree(g) * (max_degree(h) - 1), tag + " removal count");
        }
    }
    return c;
}

Check classification_vs_oracle() {
    Check c;
    auto agree = [&](const std::string& descriptor, const Graph& g) {
        const auto rule = constructions::classify_known_products(parse_family(descriptor)).verdict;
        const auto solved = constructions::classify_by_solver(g).verdict;
        c.expect(rule == solved && rule != constructions::Verdict::Unknown,
                 descriptor + ": rule " + constructions::to_string(rule) + ", solver " + constructions::to_string(solved));
    };
    for (std::size_t m = 3; m <= 7; ++m) {
        const std::string d = "C" + std::to_string(m) + " x K2";
        agree(d, parse_family(d).build());
    }
    agree("K2 x K2", parse_family("K2 x K2").build());
    {
        // K2,2 x K2,2 is two copies of K4,4
        const Graph g = parse_family("K2,2 x K2,2").build();
        const auto comps = connected_components(g);
        c.expect(comps.size() == 2, "K2,2 x K2,2 should have two components");
        agree("K2,2 x K2,2", induced_subgraph(g, comps.front()));
    }
    for (std::size_t n = 3; n <= 9; ++n) agree("C" + std::to_string(n), cycle(n));
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"cycle-product-sweep-3..20", cycle_product_sweep},
        {"merge-valid-5..200", merge_range},
        {"base-table-snapshot", base_tables},
        {"c4xc4-type2", c4xc4_type2},
        {"five-small-cases", small_cases},
        {"cycle-rule-3..12", cycle_rule},
        {"k2-lift", k2_lift},
        {"conformable-construction", conformable_products},
        {"classification-vs-oracle", classification_vs_oracle},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.ok)
            std::printf("PASS %s (%.2fs)\n", name, secs);
        else
            std::printf("FAIL %s (%.2fs): %s\n", name, secs, c.detail.c_str());
        failures += !c.ok;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
