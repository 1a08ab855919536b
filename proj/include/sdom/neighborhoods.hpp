#pragma once

#include "sdom/graph.hpp"

namespace sdom {

/// Three-way split of N(center): n1 has neighbors outside N[center], n2 sits
/// between n1 and the sealed part, n3 is confined inside N[center] with no
/// n1 contact.
struct VertexPartition {
    Vertex center;
    VertexSet n1, n2, n3;

    VertexSet n23() const { return vs_union(n2, n3); }
};

/// Same split for the joined neighborhood of a pole pair. `joint` excludes
/// the poles themselves even when they are adjacent, so a rule that deletes
/// n2 + n3 can never delete a pole.
struct PairPartition {
    Vertex pole_v, pole_w;
    VertexSet joint;
    VertexSet n1, n2, n3;

    VertexSet n23() const { return vs_union(n2, n3); }
};

struct IdenticalPolesError : std::runtime_error {
    explicit IdenticalPolesError(Vertex v)
        : std::runtime_error("pair partition requires distinct poles, got " +
                             std::to_string(v) + " twice") {}
};

inline VertexPartition partition_vertex(const Graph& g, Vertex v) {
    VertexPartition p;
    p.center = v;
    const auto closed = g.closed_neighborhood(v);
    for (Vertex u : g.neighbors(v)) {
        bool outside = false;
        for (Vertex x : g.neighbors(u))
            if (!vs_contains(closed, x)) {
                outside = true;
                break;
            }
        if (outside) p.n1.push_back(u);
    }
    for (Vertex u : g.neighbors(v)) {
        if (vs_contains(p.n1, u)) continue;
        bool touches_n1 = false;
        for (Vertex x : g.neighbors(u))
            if (vs_contains(p.n1, x)) {
                touches_n1 = true;
                break;
            }
        if (touches_n1)
            p.n2.push_back(u);
        else
            p.n3.push_back(u);
    }
    return p;
}

inline PairPartition partition_pair(const Graph& g, Vertex v, Vertex w) {
    if (v == w) throw IdenticalPolesError(v);
    PairPartition p;
    p.pole_v = v;
    p.pole_w = w;
    VertexSet poles = vs_make({v, w});
    p.joint = vs_minus(vs_union(VertexSet(g.neighbors(v).begin(), g.neighbors(v).end()),
                                VertexSet(g.neighbors(w).begin(), g.neighbors(w).end())),
                       poles);
    for (Vertex u : p.joint) {
        bool outside = false;
        for (Vertex x : g.neighbors(u))
            if (!vs_contains(p.joint, x) && x != v && x != w) {
                outside = true;
                break;
            }
        if (outside) p.n1.push_back(u);
    }
    for (Vertex u : p.joint) {
        if (vs_contains(p.n1, u)) continue;
        bool touches_n1 = false;
        for (Vertex x : g.neighbors(u))
            if (vs_contains(p.n1, x)) {
                touches_n1 = true;
                break;
            }
        if (touches_n1)
            p.n2.push_back(u);
        else
            p.n3.push_back(u);
    }
    return p;
}

/// N(inner) subset of N[outer].
inline bool is_confined(const Graph& g, Vertex inner, Vertex outer) {
    const auto closed = g.closed_neighborhood(outer);
    for (Vertex x : g.neighbors(inner))
        if (!vs_contains(closed, x)) return false;
    return true;
}

}  // namespace sdom
