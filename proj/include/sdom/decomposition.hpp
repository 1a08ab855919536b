#pragma once

#include "sdom/graph.hpp"
#include "sdom/neighborhoods.hpp"
#include "sdom/oracle.hpp"
#include "sdom/planar.hpp"

namespace sdom {

/// A vw-region: two confluent boundary paths of length <= 3 plus every vertex
/// of the plane enclosed between them (poles and path vertices included).
struct Region {
    Vertex pole_v, pole_w;
    std::vector<Vertex> path1, path2;  // vertex sequences v .. w
    VertexSet enclosed;                // V(R)

    VertexSet boundary_vertices() const {
        std::vector<Vertex> all(path1.begin(), path1.end());
        all.insert(all.end(), path2.begin(), path2.end());
        return vs_make(all);
    }
    VertexSet inner_vertices() const { return vs_minus(enclosed, boundary_vertices()); }
};

struct RegionDecomposition {
    VertexSet base_set;  // D
    std::vector<Region> regions;

    VertexSet covered() const {
        VertexSet out;
        for (const auto& r : regions) out = vs_union(out, r.enclosed);
        return out;
    }
};

struct UnderlyingMultigraph {
    VertexSet vertices;                            // = D
    std::vector<std::pair<Vertex, Vertex>> edges;  // one per region

    std::size_t degree(Vertex v) const {
        std::size_t d = 0;
        for (auto [a, b] : edges) d += (a == v) + (b == v);
        return d;
    }
};

inline UnderlyingMultigraph underlying_multigraph(const RegionDecomposition& dec) {
    UnderlyingMultigraph mg;
    mg.vertices = dec.base_set;
    for (const auto& r : dec.regions)
        mg.edges.emplace_back(std::min(r.pole_v, r.pole_w), std::max(r.pole_v, r.pole_w));
    return mg;
}

struct EmbeddingMismatchError : std::runtime_error {
    explicit EmbeddingMismatchError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Confluence of two paths: vertex-disjoint apart from shared
// endpoints; or edge-disjoint with non-interleaving rotations at every shared
// through-vertex; or confluent after contracting shared edges.
struct ConfluenceChecker {
    const Embedding* emb;
    const VertexSet* vs;

    const std::vector<Vertex>& rotation(Vertex v) const {
        auto it = std::lower_bound(vs->begin(), vs->end(), v);
        return emb->rotation[static_cast<std::size_t>(it - vs->begin())];
    }

    static std::vector<Vertex> path_neighbors(const std::vector<Vertex>& p, Vertex u) {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] == u) {
                if (i > 0) out.push_back(p[i - 1]);
                if (i + 1 < p.size()) out.push_back(p[i + 1]);
            }
        return out;
    }

    // both path-neighbor pairs present at u: true iff p's pair is contiguous
    // in the cyclic rotation restricted to the four vertices
    bool non_interleaved(Vertex u, const std::vector<Vertex>& pn,
                         const std::vector<Vertex>& qn) const {
        const auto& rot = rotation(u);
        std::vector<int> tag;  // 0 = p, 1 = q, in rotation order
        for (Vertex x : rot) {
            bool in_p = std::find(pn.begin(), pn.end(), x) != pn.end();
            bool in_q = std::find(qn.begin(), qn.end(), x) != qn.end();
            if (in_p && in_q) return true;  // shared neighbor: handled by edge contraction
            if (in_p) tag.push_back(0);
            if (in_q) tag.push_back(1);
        }
        if (tag.size() != 4) return true;
        for (std::size_t i = 0; i < 4; ++i)
            if (tag[i] == tag[(i + 1) % 4]) return true;  // a pair is adjacent cyclically
        return false;                                     // perfectly alternating = crossing
    }

    static std::vector<std::pair<Vertex, Vertex>> path_edges(const std::vector<Vertex>& p) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            out.emplace_back(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
        return out;
    }

    static std::vector<Vertex> contract_edge(const std::vector<Vertex>& p, Vertex a, Vertex b) {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i + 1 < p.size() &&
                ((p[i] == a && p[i + 1] == b) || (p[i] == b && p[i + 1] == a))) {
                out.push_back(std::min(a, b));
                ++i;
            } else {
                out.push_back(p[i] == a || p[i] == b ? std::min(a, b) : p[i]);
            }
        }
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool confluent(std::vector<Vertex> p, std::vector<Vertex> q, int depth = 0) const {
        if (depth > 4) return false;
        // shared edges: contract and recurse
        auto pe = path_edges(p), qe = path_edges(q);
        for (auto e : pe)
            if (std::find(qe.begin(), qe.end(), e) != qe.end())
                return confluent(contract_edge(p, e.first, e.second),
                                 contract_edge(q, e.first, e.second), depth + 1);
        // endpoints are always shared; interior sharing needs the rotation test
        for (Vertex u : p) {
            if (std::find(q.begin(), q.end(), u) == q.end()) continue;
            auto pn = path_neighbors(p, u);
            auto qn = path_neighbors(q, u);
            if (pn.size() < 2 || qn.size() < 2) continue;  // an endpoint cannot be crossed
            if (!non_interleaved(u, pn, qn)) return false;
        }
        return true;
    }
};

}  // namespace detail

/// Greedy maximal D-region decomposition (the existence half of the 3|D|-6
/// bound): sweep pole pairs at distance <= 3, keep the largest region that is
/// non-crossing with everything committed and contains no third D-vertex,
/// until coverage stops growing.
inline RegionDecomposition build_decomposition(const Graph& g, const Embedding& emb,
                                               const VertexSet& d) {
    if (!validate_embedding(g, emb)) throw EmbeddingMismatchError("embedding does not match graph");
    if (d.size() < 3) throw std::invalid_argument("decomposition needs |D| >= 3");
    if (!verify_domination(g, d, DominationKind::plain)) throw NotADominatingSetError();

    FaceStructure faces = trace_faces(g, emb);
    detail::ConfluenceChecker checker{&emb, &g.vertices()};

    // vertex -> incident face ids
    std::map<Vertex, VertexSet> vertex_faces;
    for (std::size_t f = 0; f < faces.faces.size(); ++f)
        for (auto [a, b] : faces.faces[f]) vs_insert(vertex_faces[a], static_cast<int>(f));

    RegionDecomposition dec;
    dec.base_set = d;
    VertexSet covered;

    auto paths_between = [&](Vertex v, Vertex w) {
        std::vector<std::vector<Vertex>> out;
        if (g.has_edge(v, w)) out.push_back({v, w});
        for (Vertex x : g.neighbors(v)) {
            if (x == w || vs_contains(d, x)) continue;
            if (g.has_edge(x, w)) out.push_back({v, x, w});
            for (Vertex y : g.neighbors(x)) {
                if (y == v || y == w || y == x || vs_contains(d, y)) continue;
                if (g.has_edge(y, w) && g.has_edge(x, v)) {
                    // both interior vertices must lie in N(v,w)
                    if (g.has_edge(y, v) || g.has_edge(y, w)) out.push_back({v, x, y, w});
                }
            }
        }
        return out;
    };

    auto try_enclosed = [&](const std::vector<Vertex>& p1, const std::vector<Vertex>& p2,
                            Vertex v, Vertex w) {
        std::vector<VertexSet> results;
        // cycle edge set
        auto ce = detail::ConfluenceChecker::path_edges(p1);
        auto ce2 = detail::ConfluenceChecker::path_edges(p2);
        ce.insert(ce.end(), ce2.begin(), ce2.end());
        std::sort(ce.begin(), ce.end());
        ce.erase(std::unique(ce.begin(), ce.end()), ce.end());

        VertexSet cycle_vertices = vs_make(std::vector<Vertex>(p1.begin(), p1.end()));
        for (Vertex x : p2) vs_insert(cycle_vertices, x);

        // side of the cycle via dual BFS from the face left of p1's first step
        auto seed = faces.face_of.find({p1[0], p1[1]});
        if (seed == faces.face_of.end()) return results;
        std::size_t nf = faces.faces.size();
        std::vector<char> in_side(nf, 0), frontier_seen(nf, 0);
        std::vector<int> stack{seed->second};
        frontier_seen[seed->second] = 1;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            in_side[f] = 1;
            for (auto [a, b] : faces.faces[f]) {
                std::pair<Vertex, Vertex> und{std::min(a, b), std::max(a, b)};
                if (std::binary_search(ce.begin(), ce.end(), und)) continue;
                int other = faces.face_of.at({b, a});
                if (!frontier_seen[other]) {
                    frontier_seen[other] = 1;
                    stack.push_back(other);
                }
            }
        }
        for (int pass = 0; pass < 2; ++pass) {
            // pass 0: the traced side; pass 1: its complement
            VertexSet enclosed = cycle_vertices;
            bool ok = true;
            for (Vertex z : g.vertices()) {
                if (vs_contains(cycle_vertices, z)) continue;
                auto it = vertex_faces.find(z);
                if (it == vertex_faces.end()) continue;  // isolated vertex: never enclosed
                bool all_in = true;
                for (int f : it->second) {
                    bool side = in_side[f];
                    if (pass == 1) side = !side;
                    if (!side) {
                        all_in = false;
                        break;
                    }
                }
                if (all_in) vs_insert(enclosed, z);
            }
            // region conditions: every vertex in N(v,w), no third D-vertex
            for (Vertex z : enclosed) {
                if (z == v || z == w) continue;
                if (!g.has_edge(z, v) && !g.has_edge(z, w)) {
                    ok = false;
                    break;
                }
                if (vs_contains(d, z)) {
                    ok = false;
                    break;
                }
            }
            if (ok) results.push_back(enclosed);
        }
        return results;
    };

    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                Vertex v = d[i], w = d[j];
                auto dist = distance(g, v, w);
                if (!dist || *dist > 3) continue;
                auto paths = paths_between(v, w);
                std::optional<Region> best;
                std::size_t best_gain = 0;
                for (std::size_t a = 0; a < paths.size(); ++a)
                    for (std::size_t b = a + 1; b < paths.size(); ++b) {
                        if (!checker.confluent(paths[a], paths[b])) continue;
                        for (const VertexSet& enclosed : try_enclosed(paths[a], paths[b], v, w)) {
                            Region cand{v, w, paths[a], paths[b], enclosed};
                            // non-crossing against every committed region
                            VertexSet inner = cand.inner_vertices();
                            bool ok = true;
                            for (const Region& prev : dec.regions) {
                                if (!vs_intersect(inner, prev.enclosed).empty() ||
                                    !vs_intersect(prev.inner_vertices(), enclosed).empty()) {
                                    ok = false;
                                    break;
                                }
                                if (!checker.confluent(cand.path1, prev.path1) ||
                                    !checker.confluent(cand.path1, prev.path2) ||
                                    !checker.confluent(cand.path2, prev.path1) ||
                                    !checker.confluent(cand.path2, prev.path2)) {
                                    ok = false;
                                    break;
                                }
                            }
                            if (!ok) continue;
                            std::size_t gain = vs_minus(enclosed, covered).size();
                            if (gain > best_gain) {
                                best_gain = gain;
                                best = std::move(cand);
                            }
                        }
                    }
                if (best && best_gain > 0) {
                    covered = vs_union(covered, best->enclosed);
                    dec.regions.push_back(std::move(*best));
                    grew = true;
                }
            }
    }
    return dec;
}

/// Verdicts for the numeric region bounds on a reduced plane graph.
struct RegionStat {
    Vertex pole_v, pole_w;
    std::size_t non_pole_vertices = 0;
    bool size_ok = false;  // <= 87
    std::size_t n1_in_region = 0;
    bool n1_ok = false;  // <= 4
};

struct DecompositionStats {
    std::vector<RegionStat> regions;
    std::size_t region_count = 0;
    std::size_t base_size = 0;
    bool region_count_ok = false;  // |R| <= 3|D| − 6
    std::size_t outside_count = 0;
    std::size_t outside_bound = 0;
    bool outside_ok = false;  // <= 97|D|
    std::size_t handshake_sum = 0;
    bool handshake_ok = false;  // Σ deg = 2|R|

    bool all_pass() const {
        if (!region_count_ok || !outside_ok || !handshake_ok) return false;
        for (const auto& r : regions)
            if (!r.size_ok || !r.n1_ok) return false;
        return true;
    }
};

constexpr std::size_t kRegionVertexBound = 87;
constexpr std::size_t kOutsideFactor = 97;
constexpr std::size_t kRegionN1Bound = 4;
constexpr std::size_t kKernelFactor = 358;

inline DecompositionStats decomposition_stats(const Graph& g, const RegionDecomposition& dec) {
    DecompositionStats stats;
    stats.base_size = dec.base_set.size();
    stats.region_count = dec.regions.size();
    stats.region_count_ok =
        dec.base_set.size() >= 3 &&
        stats.region_count <= 3 * stats.base_size - 6;

    for (const Region& r : dec.regions) {
        RegionStat rs;
        rs.pole_v = r.pole_v;
        rs.pole_w = r.pole_w;
        rs.non_pole_vertices = r.enclosed.size() - 2;
        rs.size_ok = rs.non_pole_vertices <= kRegionVertexBound;
        PairPartition pp = partition_pair(g, r.pole_v, r.pole_w);
        rs.n1_in_region = vs_intersect(pp.n1, r.enclosed).size();
        rs.n1_ok = rs.n1_in_region <= kRegionN1Bound;
        stats.regions.push_back(rs);
    }

    VertexSet covered = dec.covered();
    stats.outside_count = vs_minus(vs_minus(g.vertices(), covered), dec.base_set).size();
    stats.outside_bound = kOutsideFactor * dec.base_set.size();
    stats.outside_ok = stats.outside_count <= stats.outside_bound;

    UnderlyingMultigraph mg = underlying_multigraph(dec);
    stats.handshake_sum = 0;
    for (Vertex v : mg.vertices) stats.handshake_sum += mg.degree(v);
    stats.handshake_ok = stats.handshake_sum == 2 * dec.regions.size();
    return stats;
}

/// Kernel-size exit check: a reduced planar yes-instance has at most 358k vertices.
inline bool kernel_bound_check(std::size_t n_reduced, std::size_t k) {
    return n_reduced <= kKernelFactor * k;
}

}  // namespace sdom
