#pragma once

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "total_chroma/coloring.hpp"
#include "total_chroma/graph.hpp"

namespace total_chroma::solver {

enum class Outcome { Found, Exhausted, Aborted };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Found: return "found";
        case Outcome::Exhausted: return "exhausted";
        case Outcome::Aborted: return "aborted";
    }
    return "?";
}

struct SolverOptions {
    /// Worker threads; the search splits on the first branching level.
    unsigned jobs = 1;
    std::optional<std::chrono::milliseconds> time_limit{};
    /// 0 means unlimited.
    std::uint64_t node_limit = 0;
};

/// A node of the kernel graph pinned to a color before the search starts.
struct Fixing {
    VertexId node = 0;
    Color color = kUncolored;
};

struct VertexSearchResult {
    Outcome outcome = Outcome::Aborted;
    std::vector<Color> colors;  ///< complete coloring when Found
    std::uint64_t node_count = 0;
};

/// Complete backtracking for a proper k-coloring of `g`.
///
/// Branching picks the uncolored node with the fewest remaining colors
/// (maximum saturation), breaking ties by higher degree and then lower
/// index, and tries its colors in ascending order. Assignments are forward
/// checked against the neighbors' domains.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k) : g_(&g), k_(k) {
        if (k < 1 || k > 64) throw InvalidParameter("palette size must be in 1..64");
        const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        domains_.assign(g.vertex_count(), full);
        colors_.assign(g.vertex_count(), kUncolored);
    }

    /// Applies pinned colors; false if they already contradict each other.
    bool fix(std::span<const Fixing> fixings) {
        for (const Fixing& f : fixings) {
            if (f.color < 1 || f.color > k_) return false;
            if (colors_[f.node] != kUncolored) {
                if (colors_[f.node] != f.color) return false;
                continue;
            }
            if (!(domains_[f.node] & bit(f.color))) return false;
            if (!assign(f.node, f.color)) return false;
        }
        trail_.clear();
        return true;
    }

    /// Runs the search. Nodes are counted once per entered search node, so an
    /// exhausted run reports the same count regardless of thread count.
    VertexSearchResult run(const SolverOptions& options) {
        const auto start = std::chrono::steady_clock::now();
        std::atomic<bool> stop{false};
        std::atomic<bool> aborted{false};
        std::mutex found_mutex;
        std::optional<std::vector<Color>> found;
        std::atomic<std::uint64_t> total_nodes{1};

        const auto root = select();
        if (!root) return {Outcome::Found, colors_, 1};

        std::vector<Color> branches;
        for (Color c = 1; c <= k_; ++c)
            if (domains_[*root] & bit(c)) branches.push_back(c);

        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            ColoringSearch local = *this;
            local.start_ = start;
            local.options_ = &options;
            local.stop_ = &stop;
            local.aborted_ = &aborted;
            local.shared_nodes_ = &total_nodes;
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= branches.size() || stop.load()) break;
                ColoringSearch branch = local;
                const bool ok = branch.assign(*root, branches[i]) && branch.dfs();
                total_nodes.fetch_add(branch.nodes_);
                if (ok) {
                    std::lock_guard lock(found_mutex);
                    if (!found) found = branch.colors_;
                    stop.store(true);
                }
            }
        };

        const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(branches.size())));
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }

        VertexSearchResult result;
        result.node_count = total_nodes.load();
        if (found) {
            result.outcome = Outcome::Found;
            result.colors = std::move(*found);
        } else {
            result.outcome = aborted.load() ? Outcome::Aborted : Outcome::Exhausted;
        }
        return result;
    }

private:
    static constexpr std::uint64_t bit(Color c) noexcept { return std::uint64_t{1} << (c - 1); }

    std::optional<VertexId> select() const {
        std::optional<VertexId> best;
        int best_size = 0;
        std::size_t best_degree = 0;
        for (VertexId v = 0; v < colors_.size(); ++v) {
            if (colors_[v] != kUncolored) continue;
            const int size = std::popcount(domains_[v]);
            const std::size_t degree = g_->degree(v);
            if (!best || size < best_size || (size == best_size && degree > best_degree)) {
                best = v;
                best_size = size;
                best_degree = degree;
            }
        }
        return best;
    }

    bool assign(VertexId v, Color c) {
        colors_[v] = c;
        const std::uint64_t mask = bit(c);
        for (VertexId w : g_->neighbors(v)) {
            if (colors_[w] != kUncolored || !(domains_[w] & mask)) continue;
            trail_.emplace_back(w, domains_[w]);
            domains_[w] &= ~mask;
            if (domains_[w] == 0) return false;
        }
        return true;
    }

    void undo(VertexId v, std::size_t mark) {
        colors_[v] = kUncolored;
        while (trail_.size() > mark) {
            domains_[trail_.back().first] = trail_.back().second;
            trail_.pop_back();
        }
    }

    bool should_stop() {
        if (stop_->load(std::memory_order_relaxed)) return true;
        if ((nodes_ & 1023) != 1) return false;
        bool out = false;
        if (options_->node_limit && shared_nodes_->load(std::memory_order_relaxed) + nodes_ > options_->node_limit) out = true;
        if (options_->time_limit && std::chrono::steady_clock::now() - start_ > *options_->time_limit) out = true;
        if (out) {
            aborted_->store(true);
            stop_->store(true);
        }
        return out;
    }

    bool dfs() {
        ++nodes_;
        if (should_stop()) return false;
        const auto v = select();
        if (!v) return true;
        std::uint64_t domain = domains_[*v];
        while (domain) {
            const Color c = static_cast<Color>(std::countr_zero(domain)) + 1;
            domain &= domain - 1;
            const std::size_t mark = trail_.size();
            if (assign(*v, c) && dfs()) return true;
            undo(*v, mark);
            if (stop_->load(std::memory_order_relaxed)) return false;
        }
        return false;
    }

    const Graph* g_;
    int k_;
    std::vector<std::uint64_t> domains_;
    std::vector<Color> colors_;
    std::vector<std::pair<VertexId, std::uint64_t>> trail_;
    std::uint64_t nodes_ = 0;

    std::chrono::steady_clock::time_point start_{};
    const SolverOptions* options_ = nullptr;
    std::atomic<bool>* stop_ = nullptr;
    std::atomic<bool>* aborted_ = nullptr;
    std::atomic<std::uint64_t>* shared_nodes_ = nullptr;
};

struct SearchResult {
    int k = 0;
    Outcome outcome = Outcome::Aborted;
    std::optional<TotalColoring> witness;  ///< set iff Found
    std::uint64_t node_count = 0;
    /// FNV-1a digest of the searched instance: palette, total graph, pinned star.
    std::uint64_t search_digest = 0;
    std::chrono::duration<double> elapsed{};

    bool found() const noexcept { return outcome == Outcome::Found; }
    bool exhausted() const noexcept { return outcome == Outcome::Exhausted; }
};

namespace detail {

inline void fnv_mix(std::uint64_t& h, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
    }
}

inline std::uint64_t digest(const Graph& kernel, int k, std::span<const Fixing> fixings) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    fnv_mix(h, static_cast<std::uint64_t>(k));
    fnv_mix(h, kernel.vertex_count());
    for (const Edge& e : kernel.edges()) {
        fnv_mix(h, e.u);
        fnv_mix(h, e.v);
    }
    for (const Fixing& f : fixings) {
        fnv_mix(h, f.node);
        fnv_mix(h, static_cast<std::uint64_t>(f.color));
    }
    return h;
}

}  // namespace detail

/// Pins the lowest-indexed maximum-degree vertex to color 1 and its incident
/// edges (in edge order) to 2..deg+1, as total-graph node fixings. Any
/// total coloring can be recolored to agree with this, since the star is a
/// clique of the total graph.
inline std::vector<Fixing> star_fixings(const Graph& g) {
    std::vector<Fixing> out;
    if (g.empty()) return out;
    VertexId hub = 0;
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) > g.degree(hub)) hub = v;
    out.push_back({hub, 1});
    Color c = 2;
    for (std::size_t e : g.incident_edges(hub)) out.push_back({g.vertex_count() + e, c++});
    return out;
}

/// Decides whether `g` has a k-total coloring.
inline SearchResult has_k_total_coloring(const Graph& g, int k, const SolverOptions& options = {}) {
    if (k < 1) throw InvalidParameter("k must be at least 1");
    if (g.empty()) throw InvalidParameter("graph has no vertices");
    const auto start = std::chrono::steady_clock::now();
    const Graph kernel = total_graph(g);
    const std::vector<Fixing> fixings = star_fixings(g);

    SearchResult result;
    result.k = k;
    result.search_digest = detail::digest(kernel, k, fixings);

    if (k <= static_cast<int>(max_degree(g))) {
        result.outcome = Outcome::Exhausted;  // the pinned star alone needs deg+1 colors
    } else {
        ColoringSearch search(kernel, k);
        if (!search.fix(fixings)) {
            result.outcome = Outcome::Exhausted;
        } else {
            VertexSearchResult r = search.run(options);
            result.outcome = r.outcome;
            result.node_count = r.node_count;
            if (r.outcome == Outcome::Found) {
                TotalColoring tc = from_total_graph_colors(g, k, r.colors);
                if (!verify_total_coloring(g, tc).valid)
                    throw std::logic_error("solver produced an invalid total coloring");
                result.witness = std::move(tc);
            }
        }
    }
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

struct ChromaticResult {
    int chi_t = 0;
    TotalColoring witness;
    std::vector<SearchResult> probes;  ///< one per probed k, ascending
};

/// Probes k = Delta+1, Delta+2, ... until a total coloring is found.
/// Throws std::runtime_error if a probe aborts.
inline ChromaticResult exact_total_chromatic_number(const Graph& g, const SolverOptions& options = {}) {
    ChromaticResult out;
    for (int k = static_cast<int>(max_degree(g)) + 1;; ++k) {
        SearchResult r = has_k_total_coloring(g, k, options);
        const Outcome o = r.outcome;
        out.probes.push_back(std::move(r));
        if (o == Outcome::Aborted) throw std::runtime_error("search aborted at k=" + std::to_string(k));
        if (o == Outcome::Found) {
            out.chi_t = k;
            out.witness = *out.probes.back().witness;
            return out;
        }
    }
}

}  // namespace total_chroma::solver
