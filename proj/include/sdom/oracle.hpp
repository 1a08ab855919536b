#pragma once

#include <cstdint>

#include "sdom/graph.hpp"

namespace sdom {

enum class DominationKind { plain, total, semitotal };

inline const char* kind_name(DominationKind k) {
    switch (k) {
        case DominationKind::plain: return "ds";
        case DominationKind::total: return "tds";
        case DominationKind::semitotal: return "sds";
    }
    return "?";
}

struct DominationSolution {
    DominationKind kind;
    VertexSet chosen;
    std::size_t size() const { return chosen.size(); }
};

struct NotADominatingSetError : std::runtime_error {
    NotADominatingSetError() : std::runtime_error("base set is not a dominating set") {}
};

struct OracleBoundExceededError : std::runtime_error {
    OracleBoundExceededError(std::size_t n, std::size_t bound)
        : std::runtime_error("graph with " + std::to_string(n) +
                             " vertices exceeds oracle bound " + std::to_string(bound)) {}
};

constexpr std::size_t kDefaultOracleBound = 20;
constexpr std::size_t kOracleHardCeiling = 26;

namespace detail {

// First vertex of d without a distinct member of d within distance 2, if any.
inline std::optional<Vertex> missing_witness(const Graph& g, const VertexSet& d) {
    for (Vertex v : d) {
        bool found = false;
        for (Vertex x : ball(g, v, 2))
            if (x != v && vs_contains(d, x)) {
                found = true;
                break;
            }
        if (!found) return v;
    }
    return std::nullopt;
}

inline std::optional<Vertex> undominated_vertex(const Graph& g, const VertexSet& d) {
    for (Vertex v : g.vertices()) {
        if (vs_contains(d, v)) continue;
        bool dominated = false;
        for (Vertex u : g.neighbors(v))
            if (vs_contains(d, u)) {
                dominated = true;
                break;
            }
        if (!dominated) return v;
    }
    return std::nullopt;
}

inline std::optional<Vertex> vertex_without_neighbor_in(const Graph& g, const VertexSet& d) {
    for (Vertex v : g.vertices()) {
        bool has = false;
        for (Vertex u : g.neighbors(v))
            if (vs_contains(d, u)) {
                has = true;
                break;
            }
        if (!has) return v;
    }
    return std::nullopt;
}

}  // namespace detail

inline bool verify_domination(const Graph& g, const VertexSet& d, DominationKind kind) {
    for (Vertex v : d)
        if (!g.has_vertex(v)) throw UnknownVertexError(v);
    switch (kind) {
        case DominationKind::plain:
            return !detail::undominated_vertex(g, d).has_value();
        case DominationKind::total:
            return !detail::vertex_without_neighbor_in(g, d).has_value();
        case DominationKind::semitotal:
            return !detail::undominated_vertex(g, d).has_value() &&
                   !detail::missing_witness(g, d).has_value();
    }
    return false;
}

namespace detail {

struct ExactSearch {
    const Graph& g;
    DominationKind kind;
    std::vector<Vertex> order;       // ascending ids
    std::vector<int> closed_cover;   // |N[v]| per order index
    VertexSet chosen;
    int max_cover = 0;

    explicit ExactSearch(const Graph& gr, DominationKind k) : g(gr), kind(k) {
        order.assign(g.vertices().begin(), g.vertices().end());
        for (Vertex v : order) {
            int c = g.degree(v) + 1;
            closed_cover.push_back(c);
            max_cover = std::max(max_cover, c);
        }
    }

    // Number of vertices not dominated by `chosen` (plain-domination sense).
    std::size_t undominated_count() const {
        std::size_t cnt = 0;
        for (Vertex v : g.vertices()) {
            if (vs_contains(chosen, v)) continue;
            bool dom = false;
            for (Vertex u : g.neighbors(v))
                if (vs_contains(chosen, u)) {
                    dom = true;
                    break;
                }
            if (!dom) ++cnt;
        }
        return cnt;
    }

    bool leaf_ok() const { return verify_domination(g, chosen, kind); }

    // Lexicographic enumeration of size-k subsets with coverage pruning, so
    // the first hit is the lexicographically smallest optimum.
    bool search(std::size_t start, std::size_t remaining) {
        if (remaining == 0) return leaf_ok();
        std::size_t undom = undominated_count();
        if (undom > remaining * static_cast<std::size_t>(max_cover)) return false;
        for (std::size_t i = start; i < order.size(); ++i) {
            if (order.size() - i < remaining) break;
            chosen.push_back(order[i]);  // order[i] > everything chosen, stays sorted
            if (search(i + 1, remaining - 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace detail

/// Minimum-cardinality set of the requested kind by subset enumeration in
/// increasing cardinality (ties: lexicographically smallest). nullopt means
/// infeasible (isolated vertices under total/semitotal, or size_cap hit).
inline std::optional<DominationSolution> solve_exact(
    const Graph& g, DominationKind kind,
    std::optional<std::size_t> size_cap = std::nullopt,
    std::size_t oracle_bound = kDefaultOracleBound) {
    if (g.vertex_count() > oracle_bound)
        throw OracleBoundExceededError(g.vertex_count(), oracle_bound);
    if (kind != DominationKind::plain && has_isolated_vertex(g)) return std::nullopt;

    std::size_t hi = g.vertex_count();
    if (size_cap) hi = std::min(hi, *size_cap);
    detail::ExactSearch search(g, kind);
    for (std::size_t k = 0; k <= hi; ++k) {
        search.chosen.clear();
        if (search.search(0, k)) return DominationSolution{kind, search.chosen};
    }
    return std::nullopt;
}

}  // namespace sdom
