#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "total_chroma/coloring.hpp"
#include "total_chroma/graph.hpp"

// Matching quotients of C_m x C_n.
//
// With vertex (i, j) of C_m x C_n at index i*n + j, the row
// I_i = {(i, j) : j in Z_n} is an independent set, and the edges between rows
// i and i+1 split into two perfect matchings:
//
//   M_i  : (i, j) -- (i+1, j+1)
//   M'_i : (i, j) -- (i+1, j-1)
//
// Coloring each row and each matching with a single color turns a coloring of
// the m-node quotient multigraph into a total coloring of the product, for
// every n >= 3 at once.

namespace total_chroma::quotient {

enum class MatchingLabel { M, MPrime };

struct QuotientEdge {
    std::size_t from = 0;  ///< I_i
    std::size_t to = 0;    ///< I_{(i+1) mod m}
    MatchingLabel label = MatchingLabel::M;
    std::size_t index = 0;  ///< i
};

class MatchingQuotient {
public:
    explicit MatchingQuotient(std::size_t m) : m_(m) {
        if (m < 3) throw InvalidParameter("matching quotient requires m >= 3");
        for (std::size_t i = 0; i < m; ++i) {
            edges_.push_back({i, (i + 1) % m, MatchingLabel::M, i});
            edges_.push_back({i, (i + 1) % m, MatchingLabel::MPrime, i});
        }
    }

    std::size_t node_count() const noexcept { return m_; }
    const std::vector<QuotientEdge>& edges() const noexcept { return edges_; }

private:
    std::size_t m_;
    std::vector<QuotientEdge> edges_;
};

inline MatchingQuotient build_quotient(std::size_t m) { return MatchingQuotient(m); }

/// Human-readable list of broken quotient-validity rules; empty when valid.
inline std::vector<std::string> quotient_violations(const std::vector<Color>& i_colors,
                                                    const std::vector<Color>& m_colors,
                                                    const std::vector<Color>& mprime_colors) {
    std::vector<std::string> out;
    const std::size_t m = i_colors.size();
    if (m < 3 || m_colors.size() != m || mprime_colors.size() != m) {
        out.push_back("arrays must share a length of at least 3");
        return out;
    }
    auto in_range = [](Color c) { return c >= 1 && c <= 5; };
    for (std::size_t i = 0; i < m; ++i)
        if (!in_range(i_colors[i]) || !in_range(m_colors[i]) || !in_range(mprime_colors[i]))
            out.push_back("color outside 1..5 at index " + std::to_string(i));
    if (!out.empty()) return out;

    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t next = (i + 1) % m, prev = (i + m - 1) % m;
        const std::string at = " at " + std::to_string(i);
        if (i_colors[i] == i_colors[next]) out.push_back("adjacent rows share a color" + at);
        if (m_colors[i] == mprime_colors[i]) out.push_back("parallel matchings share a color" + at);
        const std::array<Color, 4> around{m_colors[prev], mprime_colors[prev], m_colors[i], mprime_colors[i]};
        for (Color c : around)
            if (c == i_colors[i]) {
                out.push_back("row color reused by an incident matching" + at);
                break;
            }
        // parallel pairs (0,1) and (2,3) are covered by the rule above
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 2; b < 4; ++b)
                if (around[a] == around[b]) out.push_back("matchings around a row share a color" + at);
    }
    return out;
}

/// 5-total coloring of a matching quotient. Construction checks validity.
class QuotientColoring {
public:
    QuotientColoring(std::vector<Color> i_colors, std::vector<Color> m_colors, std::vector<Color> mprime_colors)
        : i_(std::move(i_colors)), m_(std::move(m_colors)), mp_(std::move(mprime_colors)) {
        auto problems = quotient_violations(i_, m_, mp_);
        if (!problems.empty()) throw std::logic_error("invalid quotient coloring: " + problems.front());
    }

    /// Skips the validity check; for diagnosing broken tables.
    static QuotientColoring unchecked(std::vector<Color> i_colors, std::vector<Color> m_colors,
                                      std::vector<Color> mprime_colors) {
        QuotientColoring qc;
        qc.i_ = std::move(i_colors);
        qc.m_ = std::move(m_colors);
        qc.mp_ = std::move(mprime_colors);
        return qc;
    }

    std::size_t size() const noexcept { return i_.size(); }
    const std::vector<Color>& i_colors() const noexcept { return i_; }
    const std::vector<Color>& m_colors() const noexcept { return m_; }
    const std::vector<Color>& mprime_colors() const noexcept { return mp_; }

    bool is_valid() const { return quotient_violations(i_, m_, mp_).empty(); }

    friend bool operator==(const QuotientColoring&, const QuotientColoring&) = default;

private:
    QuotientColoring() = default;

    std::vector<Color> i_, m_, mp_;
};

inline constexpr std::array<std::size_t, 5> kBaseSizes{5, 6, 8, 9, 12};

/// Colorings of Q[C_b x C_n] for the five base families. All of them give
/// color 1 to I_0, color 2 to M_{b-1} and color 4 to M'_{b-1}; that shared
/// boundary is what lets copies of the b=5 table be appended.
inline QuotientColoring base_coloring(std::size_t b) {
    switch (b) {
        case 5: return {{1, 2, 3, 4, 5}, {3, 1, 2, 1, 2}, {5, 4, 5, 3, 4}};
        case 6: return {{1, 2, 3, 1, 2, 3}, {3, 1, 2, 3, 1, 2}, {5, 4, 5, 4, 5, 4}};
        case 8: return {{1, 2, 3, 4, 2, 1, 4, 3}, {3, 1, 2, 1, 4, 2, 1, 2}, {5, 4, 5, 3, 5, 3, 5, 4}};
        case 9: return {{1, 2, 3, 1, 2, 4, 1, 2, 5}, {3, 1, 2, 3, 1, 2, 4, 1, 2}, {5, 4, 5, 4, 5, 3, 5, 3, 4}};
        case 12:
            return {{1, 2, 3, 1, 5, 4, 1, 3, 2, 1, 4, 5},
                    {3, 1, 2, 3, 1, 3, 2, 1, 3, 2, 1, 2},
                    {5, 4, 5, 4, 2, 5, 4, 5, 4, 5, 3, 4}};
        default: throw InvalidParameter("no base coloring for b = " + std::to_string(b));
    }
}

struct Decomposition {
    std::size_t base = 0;      ///< b
    std::size_t patterns = 0;  ///< k, with m = 5k + b
};

/// m mod 5 = 0,1,2,3,4 selects b = 5,6,12,8,9.
inline Decomposition decompose(std::size_t m) {
    if (m < 5 || m == 7) throw InvalidParameter("merge construction needs m >= 5 and m != 7, got " + std::to_string(m));
    static constexpr std::array<std::size_t, 5> by_residue{5, 6, 12, 8, 9};
    const std::size_t b = by_residue[m % 5];
    if (m < b) throw InvalidParameter("no base family for m = " + std::to_string(m));
    return {b, (m - b) / 5};
}

/// Base block b followed by k copies of the b=5 pattern.
inline QuotientColoring merged_coloring(std::size_t m) {
    const Decomposition d = decompose(m);
    const QuotientColoring base = base_coloring(d.base);
    const QuotientColoring pattern = base_coloring(5);
    std::vector<Color> ic(m), mc(m), mpc(m);
    for (std::size_t i = 0; i < m; ++i) {
        const QuotientColoring& src = i < d.base ? base : pattern;
        const std::size_t t = i < d.base ? i : (i - d.base) % 5;
        ic[i] = src.i_colors()[t];
        mc[i] = src.m_colors()[t];
        mpc[i] = src.mprime_colors()[t];
    }
    return {std::move(ic), std::move(mc), std::move(mpc)};
}

/// The edge of matching M_i (or M'_i) leaving (i, j) in C_m x C_n.
inline Edge matching_edge(std::size_t m, std::size_t n, std::size_t i, std::size_t j, MatchingLabel label) {
    const std::size_t next_row = (i + 1) % m;
    const std::size_t col = label == MatchingLabel::M ? (j + 1) % n : (j + n - 1) % n;
    return Edge::of(i * n + j, next_row * n + col);
}

/// Pulls a quotient coloring back to a total coloring of C_m x C_n.
/// Does not verify; a quotient-valid input yields a valid 5-total coloring.
inline TotalColoring expand(const QuotientColoring& qc, std::size_t m, std::size_t n) {
    if (qc.size() != m) throw InvalidParameter("quotient coloring has length " + std::to_string(qc.size()) + ", expected " + std::to_string(m));
    if (m < 3 || n < 3) throw InvalidParameter("expansion needs m, n >= 3");
    std::vector<Color> vc(m * n);
    std::map<Edge, Color> ec;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            vc[i * n + j] = qc.i_colors()[i];
            ec.emplace(matching_edge(m, n, i, j, MatchingLabel::M), qc.m_colors()[i]);
            ec.emplace(matching_edge(m, n, i, j, MatchingLabel::MPrime), qc.mprime_colors()[i]);
        }
    }
    if (ec.size() != 2 * m * n) throw std::logic_error("matchings overlap");
    return TotalColoring(5, std::move(vc), std::move(ec));
}

}  // namespace total_chroma::quotient
