#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "sdom/generators.hpp"
#include "sdom/oracle.hpp"

using namespace sdom;

TEST_CASE("verify_domination") {
    Graph k2 = corpus::from_edges({{0, 1}});
    CHECK(verify_domination(k2, {0, 1}, DominationKind::semitotal));
    CHECK(!verify_domination(k2, {0}, DominationKind::semitotal));

    Graph claw = generate({GraphFamily::star, {3}, 0});
    CHECK(verify_domination(claw, {0}, DominationKind::plain));
    CHECK(!verify_domination(claw, {0}, DominationKind::semitotal));
    CHECK(!verify_domination(claw, {0}, DominationKind::total));  // center has no witness
    CHECK(verify_domination(claw, {0, 1}, DominationKind::total));

    CHECK_THROWS_AS(verify_domination(k2, {7}, DominationKind::plain), UnknownVertexError);
}

TEST_CASE("solve_exact basics") {
    Graph k2 = corpus::from_edges({{0, 1}});
    auto s = solve_exact(k2, DominationKind::semitotal);
    REQUIRE(s.has_value());
    CHECK(s->size() == 2);

    Graph claw = generate({GraphFamily::star, {3}, 0});
    auto claw_sds = solve_exact(claw, DominationKind::semitotal);
    REQUIRE(claw_sds.has_value());
    CHECK(claw_sds->size() == 2);
    CHECK(vs_contains(claw_sds->chosen, 0));  // center + smallest leaf by tie-break

    Graph c5 = generate({GraphFamily::cycle, {5}, 0});
    auto c5_sds = solve_exact(c5, DominationKind::semitotal);
    REQUIRE(c5_sds.has_value());
    CHECK(c5_sds->size() == 2);

    Graph lone = Graph::build({0}, {});
    CHECK(!solve_exact(lone, DominationKind::semitotal).has_value());
    CHECK(!solve_exact(lone, DominationKind::total).has_value());
    auto plain = solve_exact(lone, DominationKind::plain);
    REQUIRE(plain.has_value());
    CHECK(plain->size() == 1);

    Graph big = generate({GraphFamily::complete, {25}, 0});
    CHECK_THROWS_AS(solve_exact(big, DominationKind::plain), OracleBoundExceededError);
}

TEST_CASE("size cap") {
    Graph p9 = generate({GraphFamily::path, {9}, 0});
    auto full = solve_exact(p9, DominationKind::plain);
    REQUIRE(full.has_value());
    CHECK(full->size() == 3);
    CHECK(!solve_exact(p9, DominationKind::plain, 2).has_value());
    CHECK(solve_exact(p9, DominationKind::plain, 3).has_value());
}

TEST_CASE("returned sets verify and are minimum") {
    for (std::size_t idx = 0; idx < 30; ++idx) {
        Graph g = corpus::random_connected(idx, 2024, 4, 10);
        for (DominationKind kind :
             {DominationKind::plain, DominationKind::semitotal, DominationKind::total}) {
            auto s = solve_exact(g, kind);
            REQUIRE(s.has_value());
            REQUIRE(verify_domination(g, s->chosen, kind));
            // nothing strictly smaller works: capping one below the optimum fails
            if (s->size() > 0)
                REQUIRE(!solve_exact(g, kind, s->size() - 1).has_value());
        }
    }
}

TEST_CASE("domination chain gamma <= gamma_t2 <= gamma_t") {
    for (std::size_t idx = 0; idx < 40; ++idx) {
        Graph g = corpus::random_connected(idx, 555, 4, 12);
        auto ds = solve_exact(g, DominationKind::plain);
        auto sds = solve_exact(g, DominationKind::semitotal);
        auto tds = solve_exact(g, DominationKind::total);
        REQUIRE(ds.has_value());
        REQUIRE(sds.has_value());
        REQUIRE(tds.has_value());
        CHECK(ds->size() <= sds->size());
        CHECK(sds->size() <= tds->size());
    }
}

TEST_CASE("ds members sit within distance 3 of another member") {
    for (std::size_t idx = 0; idx < 40; ++idx) {
        Graph g = corpus::random_connected(idx, 606, 4, 12);
        auto ds = solve_exact(g, DominationKind::plain);
        REQUIRE(ds.has_value());
        if (ds->size() <= 1) continue;
        for (Vertex v : ds->chosen) {
            bool close = false;
            for (Vertex u : ds->chosen) {
                if (u == v) continue;
                auto d = distance(g, v, u);
                if (d && *d <= 3) close = true;
            }
            CHECK(close);
        }
    }
}

TEST_CASE("semitotal validity implies plain validity") {
    for (std::size_t idx = 0; idx < 20; ++idx) {
        Graph g = corpus::random_connected(idx, 909, 4, 10);
        auto sds = solve_exact(g, DominationKind::semitotal);
        REQUIRE(sds.has_value());
        CHECK(verify_domination(g, sds->chosen, DominationKind::plain));
    }
}
