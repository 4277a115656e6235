#ifndef HFACTOR_IO_HPP
#define HFACTOR_IO_HPP

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "hfactor/core.hpp"

// Text formats: degree sequence parsing, the edge-list format (bit-exact,
// block edges first), and DOT output with blocks as clusters.

namespace hfactor {
namespace io {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t token) : std::runtime_error(std::move(msg)), token_index(token) {}
    std::size_t token_index;  // 1-based position of the offending token
};

/// Comma- or whitespace-separated decimal integers.
inline std::vector<int> parse_sequence(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::size_t token_no = 0;
    auto flush = [&] {
        if (token.empty()) return;
        ++token_no;
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad token '" + token + "'", token_no);
        }
        if (pos != token.size() || value < 0)
            throw ParseError("bad token '" + token + "'", token_no);
        out.push_back(value);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            token += ch;
    }
    flush();
    if (out.empty()) throw ParseError("empty sequence", 0);
    return out;
}

enum class GraphFormat { edgelist, dot };

/// Edge list: header "n m h", then one "u v" line per edge with u < v,
/// block edges first in lexicographic order, then the rest lexicographic.
inline std::string emit_edgelist(const LabelledGraph& g, const FactorShape& shape) {
    std::ostringstream os;
    os << g.size() << ' ' << g.edge_count() << ' ' << shape.h() << '\n';
    for (int pass = 0; pass < 2; ++pass)
        for (int u = 1; u <= g.size(); ++u)
            for (int v = u + 1; v <= g.size(); ++v)
                if (g.adjacent(u, v) && shape.h_edge(u, v) == (pass == 0))
                    os << u << ' ' << v << '\n';
    return os.str();
}

inline std::string emit_dot(const LabelledGraph& g, const FactorShape& shape) {
    std::ostringstream os;
    os << "graph realization {\n";
    for (int b = 1; b <= shape.block_count(); ++b) {
        os << "  subgraph cluster_" << b << " {\n";
        for (int v = shape.block_begin(b); v <= shape.block_end(b); ++v)
            os << "    v" << v << ";\n";
        os << "  }\n";
    }
    for (int u = 1; u <= g.size(); ++u)
        for (int v = u + 1; v <= g.size(); ++v)
            if (g.adjacent(u, v)) {
                os << "  v" << u << " -- v" << v;
                if (shape.h_edge(u, v)) os << " [style=bold]";
                os << ";\n";
            }
    os << "}\n";
    return os.str();
}

inline std::string emit_graph(const LabelledGraph& g, const FactorShape& shape, GraphFormat fmt) {
    return fmt == GraphFormat::edgelist ? emit_edgelist(g, shape) : emit_dot(g, shape);
}

struct ReadGraph {
    LabelledGraph graph;
    int h = 0;
};

/// Reads the edge-list format back.
inline ReadGraph read_edgelist(const std::string& text) {
    std::istringstream is(text);
    int n = 0, h = 0;
    long long m = 0;
    if (!(is >> n >> m >> h) || n < 1 || m < 0 || h < 0)
        throw ParseError("bad edge-list header", 1);
    ReadGraph out{LabelledGraph(n), h};
    for (long long e = 0; e < m; ++e) {
        int u = 0, v = 0;
        if (!(is >> u >> v) || u < 1 || v < 1 || u > n || v > n || u == v)
            throw ParseError("bad edge line", static_cast<std::size_t>(e + 2));
        out.graph.add_edge(u, v);
    }
    return out;
}

/// Matchings, one per line: "M<t>: u1-v1 u2-v2 ...", pairs sorted.
inline std::string emit_matchings(const std::vector<std::vector<VertexPair>>& matchings) {
    std::ostringstream os;
    for (std::size_t t = 0; t < matchings.size(); ++t) {
        auto pairs = matchings[t];
        std::sort(pairs.begin(), pairs.end());
        os << 'M' << (t + 1) << ':';
        for (auto [u, v] : pairs) os << ' ' << u << '-' << v;
        os << '\n';
    }
    return os.str();
}

}  // namespace io
}  // namespace hfactor

#endif
