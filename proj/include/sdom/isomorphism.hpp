#pragma once

#include <map>

#include "sdom/graph.hpp"

namespace sdom {

struct SizeBoundExceededError : std::runtime_error {
    SizeBoundExceededError(std::size_t n, std::size_t bound)
        : std::runtime_error("graph with " + std::to_string(n) +
                             " vertices exceeds isomorphism bound " + std::to_string(bound)) {}
};

namespace detail {

// Degree of every neighbor, sorted; a cheap 1-round refinement invariant.
inline std::vector<std::vector<int>> neighbor_degree_profiles(const Graph& g) {
    std::vector<std::vector<int>> out;
    out.reserve(g.vertex_count());
    for (Vertex v : g.vertices()) {
        std::vector<int> prof;
        prof.reserve(g.neighbors(v).size());
        for (Vertex u : g.neighbors(v)) prof.push_back(g.degree(u));
        std::sort(prof.begin(), prof.end());
        out.push_back(std::move(prof));
    }
    return out;
}

inline bool extend_mapping(const Graph& g, const Graph& h,
                           const std::vector<std::vector<int>>& gp,
                           const std::vector<std::vector<int>>& hp,
                           std::vector<int>& map_gh, std::vector<bool>& used_h,
                           std::size_t next) {
    const auto& gv = g.vertices();
    const auto& hv = h.vertices();
    if (next == gv.size()) return true;
    Vertex a = gv[next];
    for (std::size_t j = 0; j < hv.size(); ++j) {
        if (used_h[j]) continue;
        Vertex b = hv[j];
        if (g.degree(a) != h.degree(b) || gp[next] != hp[j]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < next && ok; ++i)
            if (g.has_edge(gv[i], a) != h.has_edge(hv[map_gh[i]], b)) ok = false;
        if (!ok) continue;
        map_gh[next] = static_cast<int>(j);
        used_h[j] = true;
        if (extend_mapping(g, h, gp, hp, map_gh, used_h, next + 1)) return true;
        used_h[j] = false;
    }
    return false;
}

}  // namespace detail

constexpr std::size_t kDefaultIsoBound = 16;

/// Backtracking isomorphism test for small graphs (used by the reduced-graph
/// criterion and the Rule 3 P3 check).
inline bool is_isomorphic_small(const Graph& g, const Graph& h,
                                std::size_t bound = kDefaultIsoBound) {
    if (g.vertex_count() > bound) throw SizeBoundExceededError(g.vertex_count(), bound);
    if (h.vertex_count() > bound) throw SizeBoundExceededError(h.vertex_count(), bound);
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;

    std::vector<int> gd, hd;
    for (Vertex v : g.vertices()) gd.push_back(g.degree(v));
    for (Vertex v : h.vertices()) hd.push_back(h.degree(v));
    auto gds = gd, hds = hd;
    std::sort(gds.begin(), gds.end());
    std::sort(hds.begin(), hds.end());
    if (gds != hds) return false;

    auto gp = detail::neighbor_degree_profiles(g);
    auto hp = detail::neighbor_degree_profiles(h);
    {
        auto gps = gp, hps = hp;
        std::sort(gps.begin(), gps.end());
        std::sort(hps.begin(), hps.end());
        if (gps != hps) return false;
    }

    std::vector<int> map_gh(g.vertex_count(), -1);
    std::vector<bool> used_h(h.vertex_count(), false);
    return detail::extend_mapping(g, h, gp, hp, map_gh, used_h, 0);
}

}  // namespace sdom
