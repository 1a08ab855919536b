#pragma once

#include <map>

#include "sdom/graph.hpp"
#include "sdom/oracle.hpp"

namespace sdom {

enum class GadgetRole { original_x, original_y, pendant_a, pendant_b, u1, u2, d1, d2 };

inline const char* role_name(GadgetRole r) {
    switch (r) {
        case GadgetRole::original_x: return "X";
        case GadgetRole::original_y: return "Y";
        case GadgetRole::pendant_a: return "A";
        case GadgetRole::pendant_b: return "B";
        case GadgetRole::u1: return "u1";
        case GadgetRole::u2: return "u2";
        case GadgetRole::d1: return "d1";
        case GadgetRole::d2: return "d2";
    }
    return "?";
}

struct BipartiteGadgetOutput {
    Graph graph;
    std::map<Vertex, GadgetRole> roles;
    Vertex u1, d1, u2, d2;
};

struct NotBipartiteError : std::runtime_error {
    NotBipartiteError() : std::runtime_error("input graph is not bipartite with the given parts") {}
};
struct EmptyPartError : std::runtime_error {
    EmptyPartError() : std::runtime_error("both parts must be nonempty") {}
};

/// 2-coloring; nullopt when an odd cycle exists. First part holds the
/// smallest vertex of each component.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    std::map<Vertex, int> color;
    for (Vertex s : g.vertices()) {
        if (color.count(s)) continue;
        color[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex x : g.neighbors(u)) {
                auto it = color.find(x);
                if (it == color.end()) {
                    color[x] = 1 - color[u];
                    stack.push_back(x);
                } else if (it->second == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet a, b;
    for (auto [v, c] : color) (c == 0 ? a : b).push_back(v);
    return std::make_pair(a, b);
}

/// Bipartite hardness gadget: pendant a_i per x_i, pendant b_j per y_j, two P2's
/// u1-d1 and u2-d2 with d1 joined to all a_i and d2 to all b_j. The output is
/// bipartite with parts X + {u2,d1} + B and Y + {u1,d2} + A.
inline BipartiteGadgetOutput bipartite_gadget(const Graph& g, const VertexSet& parts_x,
                                              const VertexSet& parts_y) {
    if (parts_x.empty() || parts_y.empty()) throw EmptyPartError();
    if (!vs_intersect(parts_x, parts_y).empty()) throw NotBipartiteError();
    if (vs_union(parts_x, parts_y) != g.vertices()) throw NotBipartiteError();
    for (auto [u, v] : g.edges()) {
        bool ux = vs_contains(parts_x, u);
        bool vx = vs_contains(parts_x, v);
        if (ux == vx) throw NotBipartiteError();
    }

    BipartiteGadgetOutput out;
    std::vector<Vertex> vertices(g.vertices());
    std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
    Vertex next = g.fresh_id();

    for (Vertex x : parts_x) out.roles[x] = GadgetRole::original_x;
    for (Vertex y : parts_y) out.roles[y] = GadgetRole::original_y;

    VertexSet pendants_a, pendants_b;
    for (Vertex x : parts_x) {
        Vertex a = next++;
        vertices.push_back(a);
        edges.emplace_back(x, a);
        out.roles[a] = GadgetRole::pendant_a;
        pendants_a.push_back(a);
    }
    for (Vertex y : parts_y) {
        Vertex b = next++;
        vertices.push_back(b);
        edges.emplace_back(y, b);
        out.roles[b] = GadgetRole::pendant_b;
        pendants_b.push_back(b);
    }
    out.u1 = next++;
    out.d1 = next++;
    out.u2 = next++;
    out.d2 = next++;
    for (Vertex v : {out.u1, out.d1, out.u2, out.d2}) vertices.push_back(v);
    out.roles[out.u1] = GadgetRole::u1;
    out.roles[out.d1] = GadgetRole::d1;
    out.roles[out.u2] = GadgetRole::u2;
    out.roles[out.d2] = GadgetRole::d2;
    edges.emplace_back(out.u1, out.d1);
    edges.emplace_back(out.u2, out.d2);
    for (Vertex a : pendants_a) edges.emplace_back(out.d1, a);
    for (Vertex b : pendants_b) edges.emplace_back(out.d2, b);

    out.graph = Graph::build(std::move(vertices), std::move(edges));
    return out;
}

/// Empirical audit of the claimed identity gamma_t2(G') = gamma(G) + 2. Discrepancies
/// are recorded, never asserted away.
struct GadgetEquivalenceReport {
    std::size_t gamma_input = 0;          // gamma(G)
    std::size_t gamma_t2_output = 0;      // gamma_t2(G')
    bool output_feasible = false;
    bool matches_plus_two = false;
    VertexSet input_witness, output_witness;
};

inline GadgetEquivalenceReport check_gadget_equivalence(
    const Graph& g, const BipartiteGadgetOutput& out,
    std::size_t oracle_bound = kDefaultOracleBound) {
    GadgetEquivalenceReport report;
    auto ds = solve_exact(g, DominationKind::plain, std::nullopt, oracle_bound);
    auto sds = solve_exact(out.graph, DominationKind::semitotal, std::nullopt, oracle_bound);
    if (!ds) return report;  // only the empty graph; nothing to compare
    report.gamma_input = ds->size();
    report.input_witness = ds->chosen;
    report.output_feasible = sds.has_value();
    if (sds) {
        report.gamma_t2_output = sds->size();
        report.output_witness = sds->chosen;
        report.matches_plus_two = sds->size() == ds->size() + 2;
    }
    return report;
}

struct SplitPartition {
    VertexSet clique;
    VertexSet independent;
};

/// Degree-sequence split recognition (Hammer–Simeone): with degrees sorted
/// descending and m = max{i : d_i >= i−1}, the graph is split iff
/// Σ_{i<=m} d_i = m(m−1) + Σ_{i>m} d_i; the m highest-degree vertices then
/// form the clique.
inline std::optional<SplitPartition> recognize_split(const Graph& g) {
    std::vector<std::pair<int, Vertex>> by_degree;
    for (Vertex v : g.vertices()) by_degree.emplace_back(-g.degree(v), v);
    std::sort(by_degree.begin(), by_degree.end());

    std::size_t n = by_degree.size();
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (static_cast<std::size_t>(-by_degree[i].first) >= i) m = i + 1;

    long lhs = 0, rhs = static_cast<long>(m) * (static_cast<long>(m) - 1);
    for (std::size_t i = 0; i < n; ++i)
        if (i < m)
            lhs += -by_degree[i].first;
        else
            rhs += -by_degree[i].first;
    if (lhs != rhs) return std::nullopt;

    SplitPartition part;
    for (std::size_t i = 0; i < n; ++i)
        (i < m ? part.clique : part.independent).push_back(by_degree[i].second);
    part.clique = vs_make(part.clique);
    part.independent = vs_make(part.independent);

    for (std::size_t i = 0; i < part.clique.size(); ++i)
        for (std::size_t j = i + 1; j < part.clique.size(); ++j)
            if (!g.has_edge(part.clique[i], part.clique[j]))
                throw InternalInvariantError("split recognition produced a non-clique");
    for (std::size_t i = 0; i < part.independent.size(); ++i)
        for (std::size_t j = i + 1; j < part.independent.size(); ++j)
            if (g.has_edge(part.independent[i], part.independent[j]))
                throw InternalInvariantError("split recognition produced a non-independent set");
    return part;
}

struct TooSmallGraphError : std::runtime_error {
    TooSmallGraphError() : std::runtime_error("split flip rejects graphs with |V| <= 1") {}
};

/// Split-graph flip: move every independent-side dominator to its smallest
/// clique neighbor; a singleton result gets one extra neighbor as witness.
/// Output is a valid sds with |output| <= |d| + 1.
inline VertexSet split_flip(const Graph& g, const SplitPartition& part, const VertexSet& d) {
    if (g.vertex_count() <= 1) throw TooSmallGraphError();
    if (!verify_domination(g, d, DominationKind::plain)) throw NotADominatingSetError();

    VertexSet flipped;
    for (Vertex v : d) {
        if (vs_contains(part.independent, v)) {
            if (g.degree(v) == 0) throw TooSmallGraphError();  // isolated: no sds exists at all
            vs_insert(flipped, g.neighbors(v).front());        // neighbors of I lie in K
        } else {
            vs_insert(flipped, v);
        }
    }
    if (flipped.size() == 1) {
        Vertex x = flipped.front();
        if (g.degree(x) == 0) throw TooSmallGraphError();
        vs_insert(flipped, g.neighbors(x).front());
    }
    return flipped;
}

}  // namespace sdom
