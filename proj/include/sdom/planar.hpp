#pragma once

#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "sdom/graph.hpp"

namespace sdom {

/// Combinatorial embedding: per-vertex cyclic order of neighbors, parallel to
/// graph.vertices(). Face structure is derivable by tracing.
struct Embedding {
    std::vector<std::vector<Vertex>> rotation;
};

struct PlanarityResult {
    bool planar = false;
    Embedding embedding;                                // valid iff planar
    std::vector<std::pair<Vertex, Vertex>> obstruction; // Kuratowski edges iff not
};

namespace detail {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property, boost::property<boost::edge_index_t, int>>;

}  // namespace detail

inline PlanarityResult test_planarity(const Graph& g) {
    PlanarityResult result;
    const auto& vs = g.vertices();
    auto rank = [&vs](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };

    detail::BoostGraph bg(vs.size());
    for (auto [u, v] : g.edges()) boost::add_edge(rank(u), rank(v), bg);
    auto e_index = boost::get(boost::edge_index, bg);
    int next_index = 0;
    for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) boost::put(e_index, *ei, next_index++);

    using EdgeDesc = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> storage(boost::num_vertices(bg));
    std::vector<EdgeDesc> kuratowski;

    result.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    if (result.planar) {
        result.embedding.rotation.resize(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (EdgeDesc e : storage[i]) {
                std::size_t other = boost::source(e, bg) == i ? boost::target(e, bg)
                                                              : boost::source(e, bg);
                result.embedding.rotation[i].push_back(vs[other]);
            }
    } else {
        for (EdgeDesc e : kuratowski)
            result.obstruction.emplace_back(vs[boost::source(e, bg)], vs[boost::target(e, bg)]);
    }
    return result;
}

/// Faces traced from the rotation system. Each face is a closed walk of
/// directed edges; every directed edge lies on exactly one face.
struct FaceStructure {
    std::vector<std::vector<std::pair<Vertex, Vertex>>> faces;
    std::map<std::pair<Vertex, Vertex>, int> face_of;  // directed edge -> face id

    int face_left_of(Vertex u, Vertex v) const { return face_of.at({u, v}); }
};

inline FaceStructure trace_faces(const Graph& g, const Embedding& emb) {
    FaceStructure fs;
    const auto& vs = g.vertices();
    auto rank = [&vs](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    // successor of u in the rotation of v
    auto next_around = [&](Vertex v, Vertex u) {
        const auto& rot = emb.rotation[rank(v)];
        auto it = std::find(rot.begin(), rot.end(), u);
        std::size_t pos = static_cast<std::size_t>(it - rot.begin());
        return rot[(pos + 1) % rot.size()];
    };

    for (std::size_t i = 0; i < vs.size(); ++i)
        for (Vertex u : emb.rotation[i]) {
            std::pair<Vertex, Vertex> start{vs[i], u};
            if (fs.face_of.count(start)) continue;
            std::vector<std::pair<Vertex, Vertex>> walk;
            auto cur = start;
            do {
                fs.face_of[cur] = static_cast<int>(fs.faces.size());
                walk.push_back(cur);
                cur = {cur.second, next_around(cur.second, cur.first)};
            } while (cur != start);
            fs.faces.push_back(std::move(walk));
        }
    return fs;
}

/// Rotation-system sanity: each edge appears in exactly both endpoint
/// rotations, and Euler's formula holds on every component with an edge.
inline bool validate_embedding(const Graph& g, const Embedding& emb) {
    const auto& vs = g.vertices();
    if (emb.rotation.size() != vs.size()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        auto sorted = emb.rotation[i];
        std::sort(sorted.begin(), sorted.end());
        auto nb = g.neighbors(vs[i]);
        if (sorted != nb) return false;
    }
    FaceStructure fs = trace_faces(g, emb);
    for (const auto& comp : components(g)) {
        if (comp.size() == 1) continue;
        std::size_t m = induced_subgraph(g, comp).edge_count();
        VertexSet face_ids;
        for (const auto& [edge, fid] : fs.face_of)
            if (vs_contains(comp, edge.first)) vs_insert(face_ids, fid);
        long euler = static_cast<long>(comp.size()) - static_cast<long>(m) +
                     static_cast<long>(face_ids.size());
        if (euler != 2) return false;
    }
    return true;
}

}  // namespace sdom
