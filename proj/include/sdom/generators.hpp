#pragma once

#include <cstdint>
#include <set>

#include "sdom/graph.hpp"
#include "sdom/planar.hpp"

namespace sdom {

/// SplitMix64: the fixed pseudo-random generator for every seeded corpus, so
/// identical specs give identical graphs on every platform.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by multiply-shift; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // True with probability permille/1000.
    bool chance(std::uint64_t permille) { return below(1000) < permille; }
};

enum class GraphFamily {
    path,
    cycle,
    star,
    double_star,
    complete,
    complete_bipartite,
    grid,
    random_gnp,
    random_planar,
    random_bipartite,
    random_split,
};

struct InvalidParameterError : std::runtime_error {
    explicit InvalidParameterError(const std::string& what) : std::runtime_error(what) {}
};

/// parameters are family-specific naturals (probabilities in permille):
///   path(n) cycle(n) star(m) double_star(m) complete(n)
///   complete_bipartite(m,n) grid(rows,cols)
///   random_gnp(n, p_permille) random_planar(n, target_m)
///   random_bipartite(na, nb, p_permille) random_split(clique_n, indep_n, p_permille)
struct GeneratorSpec {
    GraphFamily family;
    std::vector<std::uint64_t> parameters;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t param(const GeneratorSpec& spec, std::size_t i) {
    if (i >= spec.parameters.size())
        throw InvalidParameterError("missing generator parameter " + std::to_string(i));
    return spec.parameters[i];
}

inline std::vector<Vertex> iota_vertices(std::uint64_t n) {
    std::vector<Vertex> vs(n);
    for (std::uint64_t i = 0; i < n; ++i) vs[i] = static_cast<Vertex>(i);
    return vs;
}

}  // namespace detail

inline Graph generate(const GeneratorSpec& spec) {
    using detail::iota_vertices;
    using detail::param;
    using Edge = std::pair<Vertex, Vertex>;
    std::vector<Edge> edges;

    switch (spec.family) {
        case GraphFamily::path: {
            auto n = param(spec, 0);
            if (n < 1) throw InvalidParameterError("path needs n >= 1");
            for (std::uint64_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph::build(iota_vertices(n), std::move(edges));
        }
        case GraphFamily::cycle: {
            auto n = param(spec, 0);
            if (n < 3) throw InvalidParameterError("cycle needs n >= 3");
            for (std::uint64_t i = 0; i < n; ++i)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
            return Graph::build(iota_vertices(n), std::move(edges));
        }
        case GraphFamily::star: {
            auto m = param(spec, 0);
            if (m < 1) throw InvalidParameterError("star needs m >= 1");
            for (std::uint64_t i = 1; i <= m; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
            return Graph::build(iota_vertices(m + 1), std::move(edges));
        }
        case GraphFamily::double_star: {
            auto m = param(spec, 0);
            if (m < 1) throw InvalidParameterError("double_star needs m >= 1");
            Vertex c2 = static_cast<Vertex>(m + 1);
            for (std::uint64_t i = 1; i <= m; ++i) {
                edges.emplace_back(0, static_cast<Vertex>(i));
                edges.emplace_back(c2, static_cast<Vertex>(c2 + i));
            }
            return Graph::build(iota_vertices(2 * (m + 1)), std::move(edges));
        }
        case GraphFamily::complete: {
            auto n = param(spec, 0);
            for (std::uint64_t i = 0; i < n; ++i)
                for (std::uint64_t j = i + 1; j < n; ++j)
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            return Graph::build(iota_vertices(n), std::move(edges));
        }
        case GraphFamily::complete_bipartite: {
            auto a = param(spec, 0), b = param(spec, 1);
            for (std::uint64_t i = 0; i < a; ++i)
                for (std::uint64_t j = 0; j < b; ++j)
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
            return Graph::build(iota_vertices(a + b), std::move(edges));
        }
        case GraphFamily::grid: {
            auto r = param(spec, 0), c = param(spec, 1);
            if (r < 1 || c < 1) throw InvalidParameterError("grid needs rows, cols >= 1");
            auto id = [c](std::uint64_t i, std::uint64_t j) {
                return static_cast<Vertex>(i * c + j);
            };
            for (std::uint64_t i = 0; i < r; ++i)
                for (std::uint64_t j = 0; j < c; ++j) {
                    if (j + 1 < c) edges.emplace_back(id(i, j), id(i, j + 1));
                    if (i + 1 < r) edges.emplace_back(id(i, j), id(i + 1, j));
                }
            return Graph::build(iota_vertices(r * c), std::move(edges));
        }
        case GraphFamily::random_gnp: {
            auto n = param(spec, 0), p = param(spec, 1);
            if (p > 1000) throw InvalidParameterError("p_permille must be <= 1000");
            SplitMix64 rng(spec.seed);
            for (std::uint64_t i = 0; i < n; ++i)
                for (std::uint64_t j = i + 1; j < n; ++j)
                    if (rng.chance(p))
                        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            return Graph::build(iota_vertices(n), std::move(edges));
        }
        case GraphFamily::random_planar: {
            // Sample candidate edges and keep each only if planarity is
            // preserved, so the output always passes test_planarity. The
            // working graph lives in boost form so each incremental test
            // avoids a full rebuild.
            auto n = param(spec, 0), target_m = param(spec, 1);
            if (n < 1) throw InvalidParameterError("random_planar needs n >= 1");
            std::uint64_t max_m = n >= 3 ? 3 * n - 6 : (n == 2 ? 1 : 0);
            target_m = std::min(target_m, max_m);
            SplitMix64 rng(spec.seed);
            boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(n);
            std::set<std::pair<Vertex, Vertex>> present;
            std::uint64_t attempts = 0, cap = 30 * target_m + 200;
            std::uint64_t rejected_in_a_row = 0;
            while (present.size() < target_m && attempts++ < cap &&
                   rejected_in_a_row < 500) {
                Vertex u = static_cast<Vertex>(rng.below(n));
                Vertex v = static_cast<Vertex>(rng.below(n));
                if (u == v) continue;
                auto key = std::minmax(u, v);
                std::pair<Vertex, Vertex> e{key.first, key.second};
                if (present.count(e)) continue;
                auto handle = boost::add_edge(e.first, e.second, bg);
                if (boost::boyer_myrvold_planarity_test(bg)) {
                    present.insert(e);
                    rejected_in_a_row = 0;
                } else {
                    boost::remove_edge(handle.first, bg);
                    ++rejected_in_a_row;  // saturation signal near the planar limit
                }
            }
            edges.assign(present.begin(), present.end());
            return Graph::build(iota_vertices(n), std::move(edges));
        }
        case GraphFamily::random_bipartite: {
            auto a = param(spec, 0), b = param(spec, 1), p = param(spec, 2);
            if (p > 1000) throw InvalidParameterError("p_permille must be <= 1000");
            SplitMix64 rng(spec.seed);
            for (std::uint64_t i = 0; i < a; ++i)
                for (std::uint64_t j = 0; j < b; ++j)
                    if (rng.chance(p))
                        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
            return Graph::build(iota_vertices(a + b), std::move(edges));
        }
        case GraphFamily::random_split: {
            auto k = param(spec, 0), s = param(spec, 1), p = param(spec, 2);
            if (p > 1000) throw InvalidParameterError("p_permille must be <= 1000");
            SplitMix64 rng(spec.seed);
            for (std::uint64_t i = 0; i < k; ++i)
                for (std::uint64_t j = i + 1; j < k; ++j)
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            for (std::uint64_t i = 0; i < k; ++i)
                for (std::uint64_t j = 0; j < s; ++j)
                    if (rng.chance(p))
                        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(k + j));
            return Graph::build(iota_vertices(k + s), std::move(edges));
        }
    }
    throw InvalidParameterError("unknown family");
}

}  // namespace sdom
