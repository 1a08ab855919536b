#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "sdom/generators.hpp"
#include "sdom/graph.hpp"
#include "sdom/graph_io.hpp"
#include "sdom/isomorphism.hpp"

using namespace sdom;

TEST_CASE("dimacs parsing") {
    Graph g = load_graph_string("p edge 2 1\ne 1 2\n", GraphFormat::dimacs);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));

    Graph h = load_graph_string("p edge 3 0\n", GraphFormat::dimacs);
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 0);

    try {
        load_graph_string("e 1 1\n", GraphFormat::dimacs);
        FAIL("self-loop accepted");
    } catch (const SelfLoopError& e) {
        CHECK(e.line == 1);
        CHECK(e.vertex == 0);
    }
}

TEST_CASE("edge list parsing") {
    Graph g = load_graph_string("# comment\n0 1\n1 2\n2 0\n0 1\n", GraphFormat::edgelist);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);  // duplicate line collapsed

    Graph h = load_graph_string("5\n0 1\n", GraphFormat::edgelist);
    CHECK(h.vertex_count() == 3);
    CHECK(h.degree(5) == 0);

    CHECK_THROWS_AS(load_graph_string("0 0\n", GraphFormat::edgelist), SelfLoopError);
    CHECK_THROWS_AS(load_graph_string("0 x\n", GraphFormat::edgelist), ParseError);
}

TEST_CASE("round trip identity") {
    const char* inputs[] = {"0 1\n1 2\n7\n", "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n"};
    GraphFormat fmts[] = {GraphFormat::edgelist, GraphFormat::dimacs};
    for (int i = 0; i < 2; ++i) {
        Graph g = load_graph_string(inputs[i], fmts[i]);
        std::string text = serialize_string(g, fmts[i]);
        Graph h = load_graph_string(text, fmts[i]);
        CHECK(g == h);
        CHECK(serialize_string(h, fmts[i]) == text);
    }
}

TEST_CASE("distance") {
    Graph path = generate({GraphFamily::path, {4}, 0});
    CHECK(distance(path, 0, 3) == 3);
    CHECK(distance(path, 2, 2) == 0);

    Graph two_edges = corpus::from_edges({{0, 1}, {2, 3}});
    CHECK(!distance(two_edges, 0, 3).has_value());
    CHECK_THROWS_AS(distance(two_edges, 0, 99), UnknownVertexError);
}

TEST_CASE("distance triangle inequality on random graphs") {
    for (std::size_t idx = 0; idx < 20; ++idx) {
        Graph g = corpus::random_connected(idx, 42);
        auto vs = g.vertices();
        for (Vertex u : vs)
            for (Vertex v : vs)
                for (Vertex x : vs) {
                    auto duv = distance(g, u, v), dux = distance(g, u, x), dxv = distance(g, x, v);
                    REQUIRE(duv.has_value());
                    CHECK(*duv <= *dux + *dxv);
                }
    }
}

TEST_CASE("induced subgraph") {
    Graph triangle = generate({GraphFamily::cycle, {3}, 0});
    Graph sub = induced_subgraph(triangle, {0, 1});
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.edge_count() == 1);

    Graph same = induced_subgraph(triangle, triangle.vertices());
    CHECK(same == triangle);

    // C4 v-a-w-b-v with a, b opposite: inducing on {a, b} drops all edges
    Graph c4 = corpus::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Graph opp = induced_subgraph(c4, {1, 3});
    CHECK(opp.vertex_count() == 2);
    CHECK(opp.edge_count() == 0);

    // idempotence
    for (std::size_t idx = 0; idx < 10; ++idx) {
        Graph g = corpus::random_connected(idx, 7);
        VertexSet s;
        for (Vertex v : g.vertices())
            if (v % 2 == 0) s.push_back(v);
        CHECK(induced_subgraph(g, s) == induced_subgraph(induced_subgraph(g, s), s));
    }
}

TEST_CASE("small isomorphism") {
    Graph p3a = corpus::from_edges({{0, 1}, {1, 2}});
    Graph p3b = corpus::from_edges({{5, 9}, {9, 7}});
    CHECK(is_isomorphic_small(p3a, p3b));

    Graph k3 = generate({GraphFamily::cycle, {3}, 0});
    CHECK(!is_isomorphic_small(p3a, k3));

    // K_{1,3} vs P4: degree sequences (3,1,1,1) vs (2,2,1,1)
    Graph claw = generate({GraphFamily::star, {3}, 0});
    Graph p4 = generate({GraphFamily::path, {4}, 0});
    CHECK(!is_isomorphic_small(claw, p4));

    Graph big = generate({GraphFamily::complete, {17}, 0});
    CHECK_THROWS_AS(is_isomorphic_small(big, big), SizeBoundExceededError);
}

TEST_CASE("isomorphism is an equivalence on random small graphs") {
    std::vector<Graph> pool;
    for (std::size_t idx = 0; idx < 12; ++idx)
        pool.push_back(corpus::random_connected(idx, 99, 4, 8));
    for (const Graph& a : pool) CHECK(is_isomorphic_small(a, a));  // reflexive
    for (const Graph& a : pool)
        for (const Graph& b : pool) {
            bool ab = is_isomorphic_small(a, b);
            CHECK(ab == is_isomorphic_small(b, a));  // symmetric
            if (!ab) continue;
            for (const Graph& c : pool)
                if (is_isomorphic_small(b, c)) CHECK(is_isomorphic_small(a, c));  // transitive
        }
}

TEST_CASE("relabeled graphs stay isomorphic") {
    for (std::size_t idx = 0; idx < 15; ++idx) {
        Graph g = corpus::random_connected(idx, 123, 4, 9);
        std::vector<Vertex> shifted;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex v : g.vertices()) shifted.push_back(v * 3 + 11);
        for (auto [u, v] : g.edges()) edges.emplace_back(u * 3 + 11, v * 3 + 11);
        Graph h = Graph::build(shifted, edges);
        CHECK(is_isomorphic_small(g, h));
    }
}
