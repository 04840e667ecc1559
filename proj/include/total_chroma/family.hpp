#pragma once

#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "total_chroma/error.hpp"
#include "total_chroma/graph.hpp"

// Family descriptors: "C5", "C5 x C7", "C6 x K2", "K4,4 x K3,3", "K3 x K5",
// "P4 x P6", "P4 x C5". Whitespace around 'x' is optional.

namespace total_chroma {

struct Factor {
    enum class Kind { Cycle, Path, Complete, CompleteBipartite };
    Kind kind = Kind::Cycle;
    std::size_t a = 0;
    std::size_t b = 0;  ///< second part size, CompleteBipartite only

    std::string to_string() const {
        switch (kind) {
            case Kind::Cycle: return "C" + std::to_string(a);
            case Kind::Path: return "P" + std::to_string(a);
            case Kind::Complete: return "K" + std::to_string(a);
            case Kind::CompleteBipartite: return "K" + std::to_string(a) + "," + std::to_string(b);
        }
        return "?";
    }

    Graph build() const {
        switch (kind) {
            case Kind::Cycle: return cycle(a);
            case Kind::Path: return path(a);
            case Kind::Complete: return complete(a);
            case Kind::CompleteBipartite: return complete_bipartite(a, b);
        }
        throw InvalidParameter("unknown factor kind");
    }

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// One factor, or a direct product of two.
struct FamilyDescriptor {
    std::vector<Factor> factors;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x " : "") + factors[i].to_string();
        return out;
    }

    Graph build() const {
        if (factors.size() == 1) return factors[0].build();
        return direct_product(factors[0].build(), factors[1].build());
    }
};

inline Factor parse_factor(std::string_view text) {
    static const std::regex pattern(R"(\s*([CPK])(\d+)(?:,(\d+))?\s*)");
    std::match_results<std::string_view::const_iterator> match;
    if (!std::regex_match(text.begin(), text.end(), match, pattern))
        throw ParseError("malformed factor '" + std::string(text) + "'");
    Factor f;
    const char letter = match[1].str()[0];
    if (match[2].length() > 6 || (match[3].matched && match[3].length() > 6))
        throw ParseError("factor parameter too large in '" + std::string(text) + "'");
    f.a = std::stoul(match[2].str());
    if (match[3].matched) {
        if (letter != 'K') throw ParseError("only K takes two parameters: '" + std::string(text) + "'");
        f.kind = Factor::Kind::CompleteBipartite;
        f.b = std::stoul(match[3].str());
        if (f.a < 1 || f.b < 1) throw ParseError("K_{a,b} needs a, b >= 1");
        return f;
    }
    if (letter == 'C') {
        f.kind = Factor::Kind::Cycle;
        if (f.a < 3) throw ParseError("cycles need at least 3 vertices");
    } else if (letter == 'P') {
        f.kind = Factor::Kind::Path;
        if (f.a < 1) throw ParseError("paths need at least 1 vertex");
    } else {
        f.kind = Factor::Kind::Complete;
        if (f.a < 1) throw ParseError("complete graphs need at least 1 vertex");
    }
    return f;
}

inline FamilyDescriptor parse_family(std::string_view text) {
    FamilyDescriptor d;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find('x', start);
        d.factors.push_back(parse_factor(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (d.factors.size() > 2) throw ParseError("at most two factors are supported");
    return d;
}

}  // namespace total_chroma
