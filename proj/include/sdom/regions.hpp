#pragma once

#include "sdom/graph.hpp"

namespace sdom {

/// A simple vw-region in combinatorial form: non-pole vertices are common
/// neighbors of both poles, split into at most two boundary vertices and a
/// sealed interior (interior vertices see nothing beyond poles + boundary +
/// interior).
struct SimpleRegion {
    Vertex pole_v, pole_w;
    VertexSet boundary;
    VertexSet interior;

    std::size_t non_pole_count() const { return boundary.size() + interior.size(); }
    VertexSet non_pole_vertices() const { return vs_union(boundary, interior); }
};

struct InvalidRegionError : std::runtime_error {
    explicit InvalidRegionError(const std::string& what) : std::runtime_error(what) {}
};

inline bool validate_simple_region(const Graph& g, const SimpleRegion& r) {
    if (!g.has_vertex(r.pole_v) || !g.has_vertex(r.pole_w)) return false;
    if (r.pole_v == r.pole_w) return false;
    if (r.boundary.size() > 2) return false;
    if (r.interior.empty()) return false;
    if (!vs_intersect(r.boundary, r.interior).empty()) return false;
    const VertexSet common = vs_intersect(
        VertexSet(g.neighbors(r.pole_v).begin(), g.neighbors(r.pole_v).end()),
        VertexSet(g.neighbors(r.pole_w).begin(), g.neighbors(r.pole_w).end()));
    if (!vs_subset(r.boundary, common) || !vs_subset(r.interior, common)) return false;
    // A single boundary vertex needs the v-w edge as the second boundary path.
    if (r.boundary.size() < 2 && !g.has_edge(r.pole_v, r.pole_w)) return false;
    VertexSet allowed = vs_union(vs_make({r.pole_v, r.pole_w}),
                                 vs_union(r.boundary, r.interior));
    for (Vertex z : r.interior)
        for (Vertex x : g.neighbors(z))
            if (!vs_contains(allowed, x)) return false;
    return true;
}

/// All maximal simple vw-regions: for each boundary choice the interior is the
/// greatest sealed fixpoint; regions subsumed by a larger footprint are
/// dropped. Ordered largest-first, deterministically.
inline std::vector<SimpleRegion> find_simple_regions(const Graph& g, Vertex v, Vertex w) {
    if (!g.has_vertex(v)) throw UnknownVertexError(v);
    if (!g.has_vertex(w)) throw UnknownVertexError(w);
    const VertexSet common =
        vs_intersect(VertexSet(g.neighbors(v).begin(), g.neighbors(v).end()),
                     VertexSet(g.neighbors(w).begin(), g.neighbors(w).end()));
    if (common.empty()) return {};

    std::vector<VertexSet> boundary_choices;
    for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
            boundary_choices.push_back({common[i], common[j]});
    if (g.has_edge(v, w))  // the v-w edge can serve as one boundary path
        for (Vertex b : common) boundary_choices.push_back({b});

    std::vector<SimpleRegion> found;
    for (const auto& boundary : boundary_choices) {
        VertexSet interior = vs_minus(common, boundary);
        // greatest fixpoint: drop vertices that see outside {v,w} + B + I
        bool changed = true;
        while (changed && !interior.empty()) {
            changed = false;
            VertexSet allowed = vs_union(vs_make({v, w}), vs_union(boundary, interior));
            VertexSet keep;
            for (Vertex z : interior) {
                bool sealed = true;
                for (Vertex x : g.neighbors(z))
                    if (!vs_contains(allowed, x)) {
                        sealed = false;
                        break;
                    }
                if (sealed)
                    keep.push_back(z);
                else
                    changed = true;
            }
            interior = std::move(keep);
        }
        if (interior.empty()) continue;
        found.push_back(SimpleRegion{v, w, boundary, interior});
    }

    std::sort(found.begin(), found.end(), [](const SimpleRegion& a, const SimpleRegion& b) {
        if (a.interior.size() != b.interior.size()) return a.interior.size() > b.interior.size();
        if (a.boundary != b.boundary) return a.boundary < b.boundary;
        return a.interior < b.interior;
    });
    // keep one region per footprint, drop footprints strictly inside another
    std::vector<SimpleRegion> out;
    std::vector<VertexSet> footprints;
    for (const auto& r : found) {
        VertexSet fp = r.non_pole_vertices();
        bool dominated = false;
        for (const auto& kept : footprints)
            if (vs_subset(fp, kept)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        footprints.push_back(std::move(fp));
        out.push_back(r);
    }
    return out;
}

}  // namespace sdom
