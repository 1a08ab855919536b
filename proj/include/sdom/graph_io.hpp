#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sdom/graph.hpp"

namespace sdom {

enum class GraphFormat { edgelist, dimacs };

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

namespace detail {

inline bool parse_vertex_token(const std::string& tok, long& out) {
    try {
        std::size_t pos = 0;
        out = std::stol(tok, &pos);
        return pos == tok.size();
    } catch (...) {
        return false;
    }
}

}  // namespace detail

/// Edge-list format: one "u v" pair per line, a bare "u" declares an isolated
/// vertex, '#' starts a comment. Ids are taken as-is (0-based).
/// DIMACS-like: optional "p edge n m" header declaring vertices 1..n, then
/// "e u v" lines; ids are 1-based on disk and shifted to 0-based internally.
inline Graph load_graph(std::istream& in, GraphFormat format) {
    std::vector<Vertex> vertices;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long declared_n = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (format == GraphFormat::edgelist) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        if (format == GraphFormat::edgelist) {
            std::string a, b, extra;
            if (!(ls >> a)) continue;
            long u = 0, v = 0;
            if (!detail::parse_vertex_token(a, u) || u < 0)
                throw ParseError(line_no, "bad vertex id '" + a + "'");
            if (!(ls >> b)) {
                vertices.push_back(static_cast<Vertex>(u));
                continue;
            }
            if (!detail::parse_vertex_token(b, v) || v < 0)
                throw ParseError(line_no, "bad vertex id '" + b + "'");
            if (ls >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
            if (u == v) throw SelfLoopError(static_cast<Vertex>(u), line_no);
            vertices.push_back(static_cast<Vertex>(u));
            vertices.push_back(static_cast<Vertex>(v));
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else {
            std::string kind;
            if (!(ls >> kind)) continue;
            if (kind == "c") continue;
            if (kind == "p") {
                std::string tag;
                long n = 0, m = 0;
                if (!(ls >> tag >> n) || tag != "edge" || n < 0)
                    throw ParseError(line_no, "bad problem line");
                ls >> m;  // edge count is informational only
                have_header = true;
                declared_n = n;
                for (long i = 0; i < n; ++i) vertices.push_back(static_cast<Vertex>(i));
                continue;
            }
            if (kind == "e") {
                long u = 0, v = 0;
                if (!(ls >> u >> v) || u < 1 || v < 1)
                    throw ParseError(line_no, "bad edge line");
                if (u == v) throw SelfLoopError(static_cast<Vertex>(u - 1), line_no);
                if (have_header && (u > declared_n || v > declared_n))
                    throw ParseError(line_no, "edge endpoint exceeds declared vertex count");
                vertices.push_back(static_cast<Vertex>(u - 1));
                vertices.push_back(static_cast<Vertex>(v - 1));
                edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
                continue;
            }
            throw ParseError(line_no, "unknown line kind '" + kind + "'");
        }
    }
    return Graph::build(std::move(vertices), std::move(edges));
}

inline Graph load_graph_string(const std::string& text, GraphFormat format) {
    std::istringstream in(text);
    return load_graph(in, format);
}

/// Canonical edge-list serialization: isolated vertices first (ascending),
/// then edges lexicographically with the smaller endpoint first.
inline void serialize(const Graph& g, std::ostream& out, GraphFormat format) {
    if (format == GraphFormat::edgelist) {
        for (Vertex v : g.vertices())
            if (g.degree(v) == 0) out << v << '\n';
        for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    } else {
        // DIMACS requires ids 1..n, so sparse ids are compacted order-preservingly.
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        const auto& vs = g.vertices();
        auto rank = [&vs](Vertex v) {
            return static_cast<long>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()) + 1;
        };
        for (auto [u, v] : g.edges()) out << "e " << rank(u) << ' ' << rank(v) << '\n';
    }
}

inline std::string serialize_string(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    serialize(g, out, format);
    return out.str();
}

}  // namespace sdom
