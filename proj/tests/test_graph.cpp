#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oddhom/enumerate.hpp"
#include "oddhom/graph.hpp"
#include "oddhom/structure.hpp"
#include "oddhom/verification.hpp"

using namespace oddhom;

TEST_CASE("cycle constructor") {
    Graph c7 = Graph::cycle(7);
    CHECK(c7.vertex_count() == 7);
    CHECK(c7.edge_count() == 7);
    CHECK(girth(c7) == 7);
    CHECK(Graph::cycle(3).edge_count() == 3);
    CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
}

TEST_CASE("from_edges validates and dedups") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("girth") {
    CHECK(girth(Graph::cycle(7)) == 7);
    CHECK(!girth(Graph::path(5)).has_value());
    CHECK(girth(petersen()) == 5);
    CHECK(girth(Graph::complete(4)) == 3);
}

TEST_CASE("odd girth") {
    CHECK(odd_girth(Graph::cycle(9)) == 9);
    CHECK(!odd_girth(Graph::cycle(8)).has_value());
    CHECK(odd_girth(petersen()) == 5);
    // theta with arms of 4, 3, 3 edges: cycles 7, 7, 6
    CHECK(odd_girth(theta_graph(3, 2, 2)) == 7);
    CHECK(girth(theta_graph(3, 2, 2)) == 6);
}

TEST_CASE("identify merges neighborhoods") {
    // path a-b-c folds into a single edge
    auto [g1, m1] = identify(Graph::path(3), 0, 2);
    CHECK(g1.vertex_count() == 2);
    CHECK(g1.edge_count() == 1);
    CHECK(m1(0) == m1(2));

    auto [g2, m2] = identify(Graph::cycle(6), 0, 3);
    CHECK(g2.vertex_count() == 5);
    CHECK(g2.edge_count() == 6);

    CHECK_THROWS_AS(identify(Graph::cycle(7), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(identify(Graph::cycle(7), 2, 2), std::invalid_argument);
}

TEST_CASE("identify counting invariants on random graphs") {
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
        Graph g = testing::random_graph(rng, 9, 0.35);
        int u = -1, v = -1;
        for (int a = 0; a < 9 && u < 0; ++a)
            for (int b = a + 1; b < 9; ++b)
                if (!g.has_edge(a, b)) {
                    u = a;
                    v = b;
                    break;
                }
        if (u < 0) continue;
        long long common = 0;
        for (int x : g.neighbors(u)) common += g.has_edge(v, x) ? 1 : 0;
        auto [merged, map] = identify(g, u, v);
        CHECK(merged.vertex_count() == g.vertex_count() - 1);
        CHECK(merged.edge_count() == g.edge_count() - common);
    }
}

TEST_CASE("subdivide_all") {
    Graph k4 = Graph::complete(4);
    CHECK(subdivide_all(k4, 0) == k4);
    Graph s = subdivide_all(Graph::complete(8), 4);
    CHECK(s.vertex_count() == 120);
    CHECK(s.edge_count() == 140);
    // isomorphic to C9 (labels differ: new vertices are appended)
    Graph c9ish = subdivide_all(Graph::cycle(3), 2);
    CHECK(canonical_form(c9ish) == canonical_form(Graph::cycle(9)));

    // girth multiplies, components are preserved
    std::mt19937 rng(11);
    for (int round = 0; round < 20; ++round) {
        Graph g = testing::random_graph(rng, 8, 0.3);
        Graph sub = subdivide_all(g, 2);
        CHECK(components(sub).size() == components(g).size());
        auto gg = girth(g);
        auto sg = girth(sub);
        if (gg)
            CHECK(*sg == 3 * *gg);
        else
            CHECK(!sg.has_value());
    }
}

TEST_CASE("girth and odd girth match cycle enumeration") {
    std::mt19937 rng(29);
    for (int round = 0; round < 50; ++round) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = testing::random_graph(rng, n, 0.35);
        std::optional<int> shortest, shortest_odd;
        for (int len = 3; len <= n; ++len) {
            if (cycles_of_length(g, len).empty()) continue;
            if (!shortest) shortest = len;
            if (!shortest_odd && len % 2 == 1) shortest_odd = len;
        }
        CHECK(girth(g) == shortest);
        CHECK(odd_girth(g) == shortest_odd);
    }
}

TEST_CASE("deletions") {
    Graph c7 = Graph::cycle(7);
    Graph p = delete_edge(c7, 0, 1);
    CHECK(p.edge_count() == 6);
    CHECK(!girth(p).has_value());
    CHECK_THROWS_AS(delete_edge(c7, 0, 2), std::invalid_argument);

    auto [t, map] = induced_subgraph(Graph::complete(4), {0, 1, 2});
    CHECK(t == Graph::complete(3));
    CHECK(map(3) == -1);

    auto [q, dmap] = delete_vertex(c7, 3);
    CHECK(q.vertex_count() == 6);
    CHECK(q.edge_count() == 5);
    CHECK(dmap(3) == -1);
    CHECK(dmap(4) == 3);
}

TEST_CASE("connectivity helpers") {
    CHECK(is_connected(Graph::cycle(5)));
    CHECK(is_two_connected(Graph::cycle(3)));
    CHECK(!is_two_connected(Graph::path(3)));
    // two triangles sharing a vertex
    Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK(!is_two_connected(bowtie));
    auto cuts = articulation_points(bowtie);
    REQUIRE(cuts.size() == 1);
    CHECK(cuts[0] == 2);
    CHECK(is_two_connected(petersen()));
}

TEST_CASE("fixture graphs") {
    Graph d = dodecahedron();
    CHECK(d.vertex_count() == 20);
    CHECK(d.edge_count() == 30);
    CHECK(d.min_degree() == 3);
    CHECK(d.max_degree() == 3);
    CHECK(girth(d) == 5);

    std::mt19937 rng(3);
    for (int i = 0; i < 5; ++i) {
        Graph g = random_planar_cubic(rng, 10);
        CHECK(g.min_degree() == 3);
        CHECK(g.max_degree() == 3);
        CHECK(is_two_connected(g));
        // Euler count for a planar graph: e <= 3v - 6
        CHECK(g.edge_count() <= 3 * g.vertex_count() - 6);
    }
}
