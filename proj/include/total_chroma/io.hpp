#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "total_chroma/coloring.hpp"
#include "total_chroma/error.hpp"
#include "total_chroma/graph.hpp"
#include "total_chroma/quotient.hpp"

// Text formats (one record per line, single spaces, trailing newline):
//
//   graph:  "graph <n>"  then  "e <a> <b>"          with a < b, sorted
//   total:  "tc <k>"     then  "v <i> <color>"      for i = 0..n-1
//                        then  "e <a> <b> <color>"  with a < b, sorted
//
// Writers emit exactly this layout, so parse -> write reproduces the bytes.

namespace total_chroma::io {

namespace detail {

inline std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::size_t to_index(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("expected a nonnegative integer, got '" + std::string(token) + "'", line);
    return value;
}

inline std::vector<std::vector<std::string_view>> records(std::string_view text, std::vector<std::size_t>& line_numbers) {
    std::vector<std::vector<std::string_view>> out;
    std::size_t line_no = 0, pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        auto tokens = split(text.substr(pos, end - pos));
        if (!tokens.empty()) {
            out.push_back(std::move(tokens));
            line_numbers.push_back(line_no);
        }
        pos = end + 1;
    }
    return out;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace detail

// ---- graph ----------------------------------------------------------------

inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

inline Graph parse_graph(std::string_view text) {
    std::vector<std::size_t> lines;
    auto recs = detail::records(text, lines);
    if (recs.empty() || recs[0].size() != 2 || recs[0][0] != "graph")
        throw ParseError("expected header 'graph <vertex_count>'", lines.empty() ? 1 : lines[0]);
    const std::size_t n = detail::to_index(recs[0][1], lines[0]);
    std::vector<Edge> edges;
    for (std::size_t r = 1; r < recs.size(); ++r) {
        const auto& t = recs[r];
        if (t.size() != 3 || t[0] != "e") throw ParseError("expected 'e <a> <b>'", lines[r]);
        const std::size_t a = detail::to_index(t[1], lines[r]), b = detail::to_index(t[2], lines[r]);
        if (a >= b) throw ParseError("edge endpoints must satisfy a < b", lines[r]);
        if (b >= n) throw ParseError("edge endpoint out of range", lines[r]);
        edges.push_back({a, b});
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const InvalidParameter& e) {
        throw ParseError(e.what());
    }
}

inline Graph read_graph_file(const std::string& path) { return parse_graph(detail::slurp(path)); }
inline void write_graph_file(const std::string& path, const Graph& g) { detail::spit(path, write_graph(g)); }

// ---- total coloring, text ---------------------------------------------------

inline std::string write_total_coloring(const TotalColoring& tc) {
    std::ostringstream out;
    out << "tc " << tc.palette_size() << '\n';
    for (std::size_t v = 0; v < tc.vertex_colors().size(); ++v) out << "v " << v << ' ' << tc.vertex_colors()[v] << '\n';
    for (const auto& [e, c] : tc.edge_colors()) out << "e " << e.u << ' ' << e.v << ' ' << c << '\n';
    return out.str();
}

/// Parses the text layout. Vertices must be listed 0,1,2,... before edges.
/// Coverage against a graph is checked later by verify_total_coloring.
inline TotalColoring parse_total_coloring(std::string_view text) {
    std::vector<std::size_t> lines;
    auto recs = detail::records(text, lines);
    if (recs.empty() || recs[0].size() != 2 || recs[0][0] != "tc")
        throw ParseError("expected header 'tc <k>'", lines.empty() ? 1 : lines[0]);
    const std::size_t k = detail::to_index(recs[0][1], lines[0]);
    if (k < 1) throw ParseError("palette size must be positive", lines[0]);
    std::vector<Color> vc;
    std::map<Edge, Color> ec;
    for (std::size_t r = 1; r < recs.size(); ++r) {
        const auto& t = recs[r];
        if (t[0] == "v") {
            if (t.size() != 3) throw ParseError("expected 'v <index> <color>'", lines[r]);
            if (!ec.empty()) throw ParseError("vertex record after edge records", lines[r]);
            if (detail::to_index(t[1], lines[r]) != vc.size()) throw ParseError("vertex records must be consecutive from 0", lines[r]);
            vc.push_back(static_cast<Color>(detail::to_index(t[2], lines[r])));
        } else if (t[0] == "e") {
            if (t.size() != 4) throw ParseError("expected 'e <a> <b> <color>'", lines[r]);
            const std::size_t a = detail::to_index(t[1], lines[r]), b = detail::to_index(t[2], lines[r]);
            if (a >= b) throw ParseError("edge endpoints must satisfy a < b", lines[r]);
            if (!ec.emplace(Edge{a, b}, static_cast<Color>(detail::to_index(t[3], lines[r]))).second)
                throw ParseError("duplicate edge record", lines[r]);
        } else {
            throw ParseError("unknown record '" + std::string(t[0]) + "'", lines[r]);
        }
    }
    return TotalColoring(static_cast<int>(k), std::move(vc), std::move(ec));
}

inline TotalColoring read_total_coloring_file(const std::string& path) { return parse_total_coloring(detail::slurp(path)); }
inline void write_total_coloring_file(const std::string& path, const TotalColoring& tc) {
    detail::spit(path, write_total_coloring(tc));
}

// ---- JSON -------------------------------------------------------------------

using Json = nlohmann::ordered_json;

/// {"k": int, "vertices": [color...], "edges": [[a, b, color]...]}
inline Json to_json(const TotalColoring& tc) {
    Json edges = Json::array();
    for (const auto& [e, c] : tc.edge_colors()) edges.push_back({e.u, e.v, c});
    return Json{{"k", tc.palette_size()},
                {"vertices", std::vector<Color>(tc.vertex_colors().begin(), tc.vertex_colors().end())},
                {"edges", std::move(edges)}};
}

inline TotalColoring total_coloring_from_json(const Json& j) {
    try {
        std::map<Edge, Color> ec;
        for (const auto& row : j.at("edges")) {
            if (row.size() != 3) throw ParseError("edge entries are [a, b, color]");
            const auto a = row[0].get<std::size_t>(), b = row[1].get<std::size_t>();
            if (a >= b) throw ParseError("edge endpoints must satisfy a < b");
            if (!ec.emplace(Edge{a, b}, row[2].get<Color>()).second) throw ParseError("duplicate edge entry");
        }
        return TotalColoring(j.at("k").get<int>(), j.at("vertices").get<std::vector<Color>>(), std::move(ec));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed coloring JSON: ") + e.what());
    }
}

/// {"m": int, "I": [...], "M": [...], "Mprime": [...]}
inline Json to_json(const quotient::QuotientColoring& qc) {
    return Json{{"m", qc.size()}, {"I", qc.i_colors()}, {"M", qc.m_colors()}, {"Mprime", qc.mprime_colors()}};
}

inline quotient::QuotientColoring quotient_coloring_from_json(const Json& j) {
    try {
        auto qc = quotient::QuotientColoring::unchecked(j.at("I").get<std::vector<Color>>(), j.at("M").get<std::vector<Color>>(),
                                                        j.at("Mprime").get<std::vector<Color>>());
        if (j.at("m").get<std::size_t>() != qc.size()) throw ParseError("'m' does not match array length");
        return qc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed quotient JSON: ") + e.what());
    }
}

}  // namespace total_chroma::io
