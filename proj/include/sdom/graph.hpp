#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdom {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids. Every helper below relies on
/// that ordering, so only build these through vs_make / vs_insert.
using VertexSet = std::vector<Vertex>;

struct UnknownVertexError : std::runtime_error {
    Vertex vertex;
    explicit UnknownVertexError(Vertex v)
        : std::runtime_error("unknown vertex " + std::to_string(v)), vertex(v) {}
};

struct InternalInvariantError : std::runtime_error {
    explicit InternalInvariantError(const std::string& what) : std::runtime_error(what) {}
};

struct SelfLoopError : std::runtime_error {
    Vertex vertex;
    int line;
    SelfLoopError(Vertex v, int line_no)
        : std::runtime_error("self-loop at vertex " + std::to_string(v) +
                             (line_no > 0 ? " (line " + std::to_string(line_no) + ")" : "")),
          vertex(v), line(line_no) {}
};

inline VertexSet vs_make(std::vector<Vertex> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

inline bool vs_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline void vs_insert(VertexSet& s, Vertex v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
}

inline VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet vs_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool vs_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Immutable simple undirected graph. No loops, no parallel edges; vertex ids
/// are arbitrary non-negative ints and iteration is always ascending.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from a vertex list and edge list. Duplicate edges
    /// collapse; a self-loop throws; an edge endpoint outside `vertices`
    /// throws UnknownVertexError.
    static Graph build(std::vector<Vertex> vertices,
                       std::vector<std::pair<Vertex, Vertex>> edges) {
        Graph g;
        g.vertices_ = vs_make(std::move(vertices));
        if (!g.vertices_.empty() && g.vertices_.front() < 0)
            throw std::invalid_argument("negative vertex id");
        g.adj_.assign(g.vertices_.size(), {});
        for (auto& [u, v] : edges) {
            if (u == v) throw SelfLoopError(u, 0);
            g.adj_[g.index_of(u)].push_back(v);
            g.adj_[g.index_of(v)].push_back(u);
        }
        std::size_t m = 0;
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            m += nb.size();
        }
        g.edge_count_ = m / 2;
        return g;
    }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const VertexSet& vertices() const { return vertices_; }

    bool has_vertex(Vertex v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        return it != vertices_.end() && *it == v;
    }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[index_of(v)]; }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Edges with smaller endpoint first, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(edge_count_);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (Vertex u : adj_[i])
                if (vertices_[i] < u) out.emplace_back(vertices_[i], u);
        return out;
    }

    VertexSet closed_neighborhood(Vertex v) const {
        VertexSet out = neighbors(v);
        vs_insert(out, v);
        return out;
    }

    Vertex max_vertex_id() const { return vertices_.empty() ? -1 : vertices_.back(); }

    /// Smallest id strictly greater than every existing id. Rules use this so
    /// gadget vertices are recognizable as the newest additions.
    Vertex fresh_id() const { return max_vertex_id() + 1; }

    bool operator==(const Graph& o) const {
        return vertices_ == o.vertices_ && adj_ == o.adj_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    VertexSet vertices_;
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;

    std::size_t index_of(Vertex v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v) throw UnknownVertexError(v);
        return static_cast<std::size_t>(it - vertices_.begin());
    }
};

/// Length of a shortest u,v-path; nullopt when none exists. distance(g,u,u) == 0.
inline std::optional<int> distance(const Graph& g, Vertex source, Vertex target) {
    if (!g.has_vertex(target)) throw UnknownVertexError(target);
    if (source == target) {
        if (!g.has_vertex(source)) throw UnknownVertexError(source);
        return 0;
    }
    std::vector<Vertex> frontier{source};
    VertexSet seen{source};
    if (!g.has_vertex(source)) throw UnknownVertexError(source);
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<Vertex> next;
        for (Vertex u : frontier)
            for (Vertex x : g.neighbors(u)) {
                if (vs_contains(seen, x)) continue;
                if (x == target) return depth;
                vs_insert(seen, x);
                next.push_back(x);
            }
        frontier = std::move(next);
    }
    return std::nullopt;
}

/// Vertices within distance `radius` of v, including v itself.
inline VertexSet ball(const Graph& g, Vertex v, int radius) {
    VertexSet seen{v};
    std::vector<Vertex> frontier{v};
    for (int d = 0; d < radius && !frontier.empty(); ++d) {
        std::vector<Vertex> next;
        for (Vertex u : frontier)
            for (Vertex x : g.neighbors(u))
                if (!vs_contains(seen, x)) {
                    vs_insert(seen, x);
                    next.push_back(x);
                }
        frontier = std::move(next);
    }
    return seen;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (!g.has_vertex(v)) throw UnknownVertexError(v);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v : s)
        for (Vertex u : g.neighbors(v))
            if (v < u && vs_contains(s, u)) edges.emplace_back(v, u);
    return Graph::build(s, std::move(edges));
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return ball(g, g.vertices().front(), static_cast<int>(g.vertex_count())).size() ==
           g.vertex_count();
}

inline bool has_isolated_vertex(const Graph& g) {
    for (Vertex v : g.vertices())
        if (g.degree(v) == 0) return true;
    return false;
}

/// Connected components, each a sorted VertexSet, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (Vertex v : g.vertices()) {
        if (vs_contains(seen, v)) continue;
        VertexSet comp = ball(g, v, static_cast<int>(g.vertex_count()));
        seen = vs_union(seen, comp);
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace sdom
