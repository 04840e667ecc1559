#pragma once

#include <array>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "total_chroma/coloring.hpp"
#include "total_chroma/graph.hpp"
#include "total_chroma/io.hpp"
#include "total_chroma/solver.hpp"

#ifndef TOTAL_CHROMA_DEFAULT_ASSET_DIR
#define TOTAL_CHROMA_DEFAULT_ASSET_DIR "assets"
#endif

namespace total_chroma::assets {

/// Products C_m x C_n (m <= n) too small for the merge construction. Their
/// 5-total colorings are found by the exact solver and stored as files.
struct SmallCase {
    std::size_t m;
    std::size_t n;
};

inline constexpr std::array<SmallCase, 5> kSmallCases{{{3, 3}, {3, 4}, {3, 7}, {4, 7}, {7, 7}}};

inline bool is_small_case(std::size_t m, std::size_t n) {
    if (m > n) std::swap(m, n);
    for (auto c : kSmallCases)
        if (c.m == m && c.n == n) return true;
    return false;
}

inline std::string file_name(std::size_t m, std::size_t n) {
    return "c" + std::to_string(m) + "xc" + std::to_string(n) + ".tc";
}

/// $TOTAL_CHROMA_ASSET_DIR if set, otherwise the compiled-in default.
inline std::filesystem::path default_asset_dir() {
    if (const char* env = std::getenv("TOTAL_CHROMA_ASSET_DIR"); env && *env) return env;
    return TOTAL_CHROMA_DEFAULT_ASSET_DIR;
}

/// Loads and re-verifies the stored coloring of C_m x C_n, m <= n.
inline TotalColoring load_small_case(std::size_t m, std::size_t n, const std::filesystem::path& dir = default_asset_dir()) {
    if (m > n || !is_small_case(m, n))
        throw InvalidParameter("no stored coloring for C" + std::to_string(m) + " x C" + std::to_string(n));
    const auto file = dir / file_name(m, n);
    if (!std::filesystem::exists(file))
        throw std::runtime_error("missing asset " + file.string() + " (run 'total_chroma gen-assets')");
    TotalColoring tc = io::read_total_coloring_file(file.string());
    const Graph g = direct_product(cycle(m), cycle(n));
    if (tc.palette_size() != 5 || !verify_total_coloring(g, tc).valid)
        throw std::runtime_error("asset " + file.string() + " is not a valid 5-total coloring");
    return tc;
}

/// Solves each small case at k = 5 in deterministic single-threaded mode and
/// writes the witnesses. Rewriting produces identical files.
inline std::vector<std::filesystem::path> generate_small_case_assets(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    for (auto c : kSmallCases) {
        const Graph g = direct_product(cycle(c.m), cycle(c.n));
        auto r = solver::has_k_total_coloring(g, 5, {.jobs = 1});
        if (!r.found())
            throw std::runtime_error("no 5-total coloring found for C" + std::to_string(c.m) + " x C" + std::to_string(c.n) +
                                     " (" + solver::to_string(r.outcome) + ")");
        const auto file = dir / file_name(c.m, c.n);
        io::write_total_coloring_file(file.string(), *r.witness);
        written.push_back(file);
    }
    return written;
}

}  // namespace total_chroma::assets
