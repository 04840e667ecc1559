#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>

#include "total_chroma/coloring.hpp"
#include "total_chroma/quotient.hpp"

namespace total_chroma::svg {

/// Fill for palette color c: pink, green, blue, yellow, brown, then gray.
inline const char* fill(Color c) {
    static constexpr std::array<const char*, 6> palette{"#f48fb1", "#43a047", "#1e88e5", "#fdd835", "#8d6e63", "#9e9e9e"};
    if (c < 1) return "#000000";
    return palette[static_cast<std::size_t>(std::min<Color>(c, 6) - 1)];
}

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

inline void line(std::ostringstream& out, double x1, double y1, double x2, double y2, Color c, bool dashed) {
    out << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
        << "\" stroke=\"" << fill(c) << "\" stroke-width=\"3\"" << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
}

inline void disk(std::ostringstream& out, double x, double y, Color c) {
    out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"7\" fill=\"" << fill(c)
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
}

}  // namespace detail

/// Grid drawing of a total coloring of C_m x C_n: row i, column j holds
/// vertex (i, j). Edges that wrap around are drawn as dashed half-length
/// stubs at both ends.
inline std::string render_cycle_product(std::size_t m, std::size_t n, const TotalColoring& tc) {
    constexpr double step = 40.0, margin = 40.0;
    const double width = 2 * margin + step * static_cast<double>(n - 1);
    const double height = 2 * margin + step * static_cast<double>(m - 1);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::num(width) << "\" height=\"" << detail::num(height)
        << "\" viewBox=\"0 0 " << detail::num(width) << ' ' << detail::num(height) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    auto x_of = [&](double j) { return margin + step * j; };
    auto y_of = [&](double i) { return margin + step * i; };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int dj : {+1, -1}) {
                const std::size_t ni = (i + 1) % m;
                const std::size_t nj = dj > 0 ? (j + 1) % n : (j + n - 1) % n;
                const Color c = tc.edge_color(Edge::of(i * n + j, ni * n + nj));
                const bool straight = i + 1 < m && (dj > 0 ? j + 1 < n : j > 0);
                const double jd = static_cast<double>(j), id = static_cast<double>(i);
                if (straight) {
                    detail::line(out, x_of(jd), y_of(id), x_of(jd + dj), y_of(id + 1), c, false);
                } else {
                    const double njd = static_cast<double>(nj), nid = static_cast<double>(ni);
                    detail::line(out, x_of(jd), y_of(id), x_of(jd + dj * 0.5), y_of(id + 0.5), c, true);
                    detail::line(out, x_of(njd), y_of(nid), x_of(njd - dj * 0.5), y_of(nid - 0.5), c, true);
                }
            }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            detail::disk(out, x_of(static_cast<double>(j)), y_of(static_cast<double>(i)), tc.vertex_color(i * n + j));
    out << "</svg>\n";
    return out.str();
}

/// Circular drawing of a colored matching quotient: node I_i on a circle,
/// M_i and M'_i as two arcs bending to either side of the chord.
inline std::string render_quotient(const quotient::QuotientColoring& qc) {
    constexpr double size = 360.0, radius = 140.0, bend = 18.0;
    constexpr double pi = 3.14159265358979323846;
    const std::size_t m = qc.size();
    auto pos = [&](std::size_t i) {
        const double a = 2 * pi * static_cast<double>(i) / static_cast<double>(m) - pi / 2;
        return std::pair{size / 2 + radius * std::cos(a), size / 2 + radius * std::sin(a)};
    };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"360.0\" height=\"360.0\" viewBox=\"0 0 360.0 360.0\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (std::size_t i = 0; i < m; ++i) {
        const auto [x1, y1] = pos(i);
        const auto [x2, y2] = pos((i + 1) % m);
        const double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
        const double len = std::hypot(x2 - x1, y2 - y1);
        const double nx = -(y2 - y1) / len, ny = (x2 - x1) / len;
        const std::array<std::pair<Color, double>, 2> arcs{{{qc.m_colors()[i], bend}, {qc.mprime_colors()[i], -bend}}};
        for (const auto& [c, s] : arcs)
            out << "  <path d=\"M " << detail::num(x1) << ' ' << detail::num(y1) << " Q " << detail::num(mx + nx * s) << ' '
                << detail::num(my + ny * s) << ' ' << detail::num(x2) << ' ' << detail::num(y2) << "\" fill=\"none\" stroke=\""
                << fill(c) << "\" stroke-width=\"4\"/>\n";
    }
    for (std::size_t i = 0; i < m; ++i) {
        const auto [x, y] = pos(i);
        detail::disk(out, x, y, qc.i_colors()[i]);
        out << "  <text x=\"" << detail::num(x) << "\" y=\"" << detail::num(y - 12) << "\" font-size=\"11\" text-anchor=\"middle\">I"
            << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace total_chroma::svg
