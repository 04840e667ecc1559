// total_chroma: construct, verify and search minimum total colorings.
//
// Exit codes: 0 success, 1 invalid coloring or Type 2 verdict,
// 2 usage or parse error, 3 solver aborted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "total_chroma/total_chroma.hpp"

namespace tc = total_chroma;

namespace {

enum ExitCode { kOk = 0, kRejected = 1, kUsage = 2, kAborted = 3 };

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::string dump(const tc::io::Json& j) { return j.dump(2) + "\n"; }

tc::TotalColoring read_coloring(const std::string& path) {
    const std::string text = tc::io::detail::slurp(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return tc::io::total_coloring_from_json(tc::io::Json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
            throw tc::ParseError(e.what());
        }
    }
    return tc::io::parse_total_coloring(text);
}

std::string format_coloring(const tc::TotalColoring& coloring, const std::string& format) {
    return format == "json" ? dump(tc::io::to_json(coloring)) : tc::io::write_total_coloring(coloring);
}

int cmd_color(std::size_t m, std::size_t n, const std::string& format, const std::string& out) {
    const auto result = tc::quotient::color_cm_cn(m, n);
    if (const auto* cert = std::get_if<tc::quotient::Type2Certificate>(&result)) {
        // the certificate is JSON whatever --format says, except for a drawing
        if (format == "svg")
            emit(tc::svg::render_cycle_product(m, n, cert->coloring), out);
        else
            emit(dump(tc::quotient::to_json(*cert)), out);
        return kRejected;
    }
    const auto& built = std::get<tc::quotient::CycleProductColoring>(result);
    if (format == "svg")
        emit(tc::svg::render_cycle_product(m, n, built.coloring), out);
    else
        emit(format_coloring(built.coloring, format), out);
    return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
    const tc::Graph g = tc::io::read_graph_file(graph_path);
    const tc::TotalColoring coloring = read_coloring(coloring_path);
    const auto report = tc::verify_total_coloring(g, coloring);
    if (report.valid) {
        std::cout << "valid k=" << coloring.palette_size() << "\n";
        return kOk;
    }
    std::cout << "invalid conflicts=" << report.conflicts.size() << "\n";
    for (const auto& c : report.conflicts)
        std::cout << "conflict " << c.first.to_string() << ' ' << c.second.to_string() << ' ' << c.color << "\n";
    return kRejected;
}

int cmd_classify(const std::string& descriptor) {
    const auto family = tc::parse_family(descriptor);
    const auto c = tc::constructions::classify_known_products(family);
    tc::io::Json j{{"descriptor", family.to_string()},
                   {"verdict", tc::constructions::to_string(c.verdict)},
                   {"source", tc::constructions::to_string(c.source)},
                   {"rule", c.rule_id}};
    std::cout << dump(j);
    return c.verdict == tc::constructions::Verdict::Type2 ? kRejected : kOk;
}

struct ExactArgs {
    std::string graph_path;
    std::string family;
    std::optional<int> k;
    bool min = false;
    unsigned jobs = 1;
    bool deterministic = false;
    std::string witness_out;
    double timeout_s = 0;
};

tc::io::Json probe_json(const tc::solver::SearchResult& r, bool with_time) {
    tc::io::Json j{{"k", r.k},
                   {"outcome", tc::solver::to_string(r.outcome)},
                   {"node_count", r.node_count},
                   {"search_digest", r.search_digest}};
    if (with_time) j["elapsed_s"] = r.elapsed.count();
    return j;
}

int cmd_exact(const ExactArgs& a) {
    const tc::Graph g = a.graph_path.empty() ? tc::parse_family(a.family).build() : tc::io::read_graph_file(a.graph_path);
    tc::solver::SolverOptions options;
    options.jobs = a.deterministic ? 1 : a.jobs;
    if (a.timeout_s > 0) options.time_limit = std::chrono::milliseconds(static_cast<long long>(a.timeout_s * 1000));
    const bool with_time = !a.deterministic;
    const int delta = static_cast<int>(tc::max_degree(g));

    if (a.k) {
        const auto r = tc::solver::has_k_total_coloring(g, *a.k, options);
        std::cout << dump(probe_json(r, with_time));
        if (r.found() && !a.witness_out.empty()) tc::io::write_total_coloring_file(a.witness_out, *r.witness);
        return r.outcome == tc::solver::Outcome::Aborted ? kAborted : kOk;
    }

    tc::io::Json probes = tc::io::Json::array();
    for (int k = delta + 1;; ++k) {
        const auto r = tc::solver::has_k_total_coloring(g, k, options);
        probes.push_back(probe_json(r, with_time));
        if (r.outcome == tc::solver::Outcome::Aborted) {
            std::cout << dump(tc::io::Json{{"outcome", "aborted"}, {"probes", probes}});
            return kAborted;
        }
        if (r.found()) {
            const char* type = k == delta + 1 ? "Type1" : k == delta + 2 ? "Type2" : "beyond-Delta+2";
            std::cout << dump(tc::io::Json{{"chi_t", k}, {"max_degree", delta}, {"type", type}, {"probes", probes}});
            if (!a.witness_out.empty()) tc::io::write_total_coloring_file(a.witness_out, *r.witness);
            return k == delta + 1 ? kOk : kRejected;
        }
    }
}

int cmd_quotient(std::size_t m, const std::string& format, const std::string& out) {
    const auto qc = tc::quotient::merged_coloring(m);
    emit(format == "svg" ? tc::svg::render_quotient(qc) : dump(tc::io::to_json(qc)), out);
    return kOk;
}

int cmd_conformable(const std::string& g_desc, const std::string& h_desc, const std::string& out) {
    const tc::Graph g = tc::parse_family(g_desc).build();
    const tc::Graph h = tc::parse_family(h_desc).build();
    if (!tc::is_regular(g) || !tc::is_regular(h)) throw tc::InvalidParameter("both factors must be regular");
    const auto f = tc::find_conformable_coloring(g);
    if (!f) {
        std::cout << dump(tc::io::Json{{"conformable", false}, {"reason", g_desc + " has no conformable coloring"}});
        return kRejected;
    }
    const auto result = tc::constructions::conformable_product(g, h, *f);
    const tc::Graph product = tc::direct_product(g, h);
    const bool ok = tc::is_conformable(product, result.coloring);
    const auto sizes = result.coloring.class_sizes();
    const auto colors = result.coloring.vertex_colors();
    tc::io::Json j{{"conformable", ok},
                   {"palette", result.coloring.palette_size()},
                   {"parity", result.plan.parity_case == tc::constructions::ParityCase::Odd ? "odd" : "even"},
                   {"factor_coloring", std::vector<tc::Color>(f->vertex_colors().begin(), f->vertex_colors().end())},
                   {"class_sizes", std::vector<std::size_t>(sizes.begin(), sizes.end())},
                   {"anchors", result.plan.u_anchors},
                   {"removed", result.plan.a_sets},
                   {"vertex_colors", std::vector<tc::Color>(colors.begin(), colors.end())}};
    emit(dump(j), out);
    return ok ? kOk : kRejected;
}

int cmd_lift(const std::string& graph_path, const std::string& coloring_path, const std::string& format,
             const std::string& out, const std::string& graph_out) {
    const tc::Graph g = tc::io::read_graph_file(graph_path);
    const tc::TotalColoring f = read_coloring(coloring_path);
    if (!tc::verify_total_coloring(g, f).valid) {
        std::cerr << "input coloring is not a valid total coloring\n";
        return kRejected;
    }
    const auto lifted = tc::constructions::lift_to_k2(g, f);
    if (!graph_out.empty()) tc::io::write_graph_file(graph_out, tc::direct_product(g, tc::complete(2)));
    emit(format_coloring(lifted, format), out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum total colorings of direct products of graphs"};
    app.require_subcommand(1);

    std::size_t m = 0, n = 0;
    std::string format = "tc", out;
    auto* color = app.add_subcommand("color", "5-total coloring of C_m x C_n");
    color->add_option("--m", m, "rows (>= 3)")->required();
    color->add_option("--n", n, "columns (>= 3)")->required();
    color->add_option("--format", format, "json | tc | svg")->check(CLI::IsMember({"json", "tc", "svg"}));
    color->add_option("--out", out, "write to file instead of stdout");

    std::string graph_path, coloring_path;
    auto* verify = app.add_subcommand("verify", "check a total coloring against a graph");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--coloring", coloring_path, "text or JSON coloring")->required();

    std::string descriptor;
    auto* classify = app.add_subcommand("classify", "Type of a known product family, e.g. \"K4,4 x K3,3\"");
    classify->add_option("descriptor", descriptor)->required();

    ExactArgs exact_args;
    auto* exact = app.add_subcommand("exact", "exact total-coloring search");
    auto* graph_opt = exact->add_option("--graph", exact_args.graph_path);
    auto* family_opt = exact->add_option("--family", exact_args.family);
    graph_opt->excludes(family_opt);
    auto* k_opt = exact->add_option("--k", exact_args.k, "probe a single palette size");
    auto* min_opt = exact->add_flag("--min", exact_args.min, "compute chi_T");
    k_opt->excludes(min_opt);
    exact->add_option("--jobs", exact_args.jobs)->check(CLI::PositiveNumber);
    exact->add_flag("--deterministic", exact_args.deterministic, "single thread, no timings in output");
    exact->add_option("--witness-out", exact_args.witness_out);
    exact->add_option("--timeout", exact_args.timeout_s, "seconds per probe");

    std::string q_format = "json";
    auto* quotient = app.add_subcommand("quotient", "merged quotient coloring for C_m x C_n");
    quotient->add_option("--m", m)->required();
    quotient->add_option("--format", q_format, "json | svg")->check(CLI::IsMember({"json", "svg"}));
    quotient->add_option("--out", out);

    std::string g_desc, h_desc;
    auto* conformable = app.add_subcommand("conformable", "conformable coloring of G x H");
    conformable->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    conformable->add_option("--g", g_desc, "regular factor G, e.g. C9")->required();
    conformable->add_option("--h", h_desc, "regular factor H")->required();
    conformable->add_option("--out", out);

    std::string graph_out;
    auto* lift = app.add_subcommand("lift", "lift a total coloring of G to G x K2");
    lift->add_option("--graph", graph_path)->required();
    lift->add_option("--coloring", coloring_path)->required();
    lift->add_option("--format", format, "tc | json")->check(CLI::IsMember({"json", "tc"}));
    lift->add_option("--out", out);
    lift->add_option("--graph-out", graph_out, "also write the product graph");

    std::string asset_dir = tc::assets::default_asset_dir().string();
    auto* gen = app.add_subcommand("gen-assets", "regenerate the stored small-case colorings");
    gen->add_option("--dir", asset_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*color) return cmd_color(m, n, format, out);
        if (*verify) return cmd_verify(graph_path, coloring_path);
        if (*classify) return cmd_classify(descriptor);
        if (*exact) {
            if (exact_args.graph_path.empty() == exact_args.family.empty()) throw CLI::ValidationError("exactly one of --graph, --family");
            if (!exact_args.k && !exact_args.min) throw CLI::ValidationError("one of --k, --min is required");
            return cmd_exact(exact_args);
        }
        if (*quotient) return cmd_quotient(m, q_format, out);
        if (*conformable) return cmd_conformable(g_desc, h_desc, out);
        if (*lift) return cmd_lift(graph_path, coloring_path, format, out, graph_out);
        if (*gen) {
            for (const auto& p : tc::assets::generate_small_case_assets(asset_dir)) std::cout << p.string() << "\n";
            return kOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const tc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const tc::MalformedColoring& e) {
        std::cerr << "malformed coloring: " << e.what() << "\n";
        return kUsage;
    } catch (const tc::InvalidParameter& e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
