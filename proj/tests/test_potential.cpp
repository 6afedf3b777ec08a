#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oddhom/potential.hpp"
#include "oddhom/verification.hpp"

using namespace oddhom;

TEST_CASE("rational arithmetic") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-4, 6).str() == "-2/3");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK((Rational(7, 2) * Rational(2, 7)).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("potential values") {
    CHECK(potential(Graph::cycle(7)) == Rational(14));
    // paths: p = 17(t+1) - 15t = 2t + 17
    for (int t = 1; t <= 6; ++t) CHECK(potential(Graph::path(t + 1)) == Rational(2 * t + 17));
    CHECK(potential(tight_c7_examples()[0].graph) == Rational(2));
    CHECK(potential(tight_c7_examples()[1].graph) == Rational(2));
    CHECK(potential(tight_c7_examples()[2].graph) == Rational(2));
    PotentialParams p53{Rational(5), Rational(3)};
    CHECK(potential(Graph::cycle(4), p53) == Rational(8));
    CHECK_THROWS_AS(potential(Graph::cycle(4), PotentialParams{Rational(0), Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("potential is additive over disjoint unions and decreasing in edges") {
    std::mt19937 rng(23);
    for (int round = 0; round < 30; ++round) {
        Graph a = testing::random_graph(rng, 6, 0.4);
        Graph b = testing::random_graph(rng, 5, 0.4);
        std::vector<std::pair<int, int>> es;
        for (const Edge& e : a.edges()) es.emplace_back(e.u, e.v);
        for (const Edge& e : b.edges()) es.emplace_back(6 + e.u, 6 + e.v);
        Graph both = Graph::from_edges(11, es);
        CHECK(potential(both) == potential(a) + potential(b));
    }
    // beta > 0: adding an edge strictly lowers the potential
    Graph c6 = Graph::cycle(6);
    Graph with_chord = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    CHECK(potential(with_chord) < potential(c6));
}

TEST_CASE("density predicates") {
    auto fig = density_predicates(tight_c7_examples()[0].graph, 3);
    CHECK(fig.main_applicable);
    CHECK(fig.main_holds);
    CHECK(fig.main_equality);

    auto ore3 = density_predicates(subdivide_all(Graph::complete(8), 4), 3);
    CHECK(ore3.ore_equality);
    CHECK(ore3.ore_rhs == Rational(140));

    auto ore2 = density_predicates(subdivide_all(Graph::complete(6), 2), 2);
    CHECK(ore2.ore_equality);
    CHECK(ore2.basic_applicable);
    CHECK(ore2.basic_holds);
    // e = 45 vs (1 + 1/8) * 36 + 1/6 = 122/3
    CHECK(ore2.basic_rhs == Rational(122, 3));

    auto cyc = density_predicates(Graph::cycle(9), 3);
    CHECK(!cyc.basic_applicable);
}

TEST_CASE("build_G_F_phi small cases") {
    Graph c7 = Graph::cycle(7);
    Graph a = tight_c7_examples()[0].graph;

    // a single vertex: same graph up to relabeling
    SubgraphRef f;
    f.vertices = {5};
    std::vector<int> phi(16, -1);
    phi[5] = 2;
    auto r = build_G_F_phi(a, f, c7, phi);
    CHECK(r.graph.vertex_count() == 16);
    CHECK(r.graph.edge_count() == 18);

    // two nonadjacent vertices on one color behave like identify()
    SubgraphRef f2;
    f2.vertices = {3, 9};
    std::vector<int> phi2(16, -1);
    phi2[3] = phi2[9] = 0;
    auto r2 = build_G_F_phi(a, f2, c7, phi2);
    auto [merged, map] = identify(a, 3, 9);
    CHECK(r2.graph.vertex_count() == merged.vertex_count());
    CHECK(r2.graph.edge_count() == merged.edge_count());

    // a 4-string with endpoints, folded onto a single edge of the target:
    // the image is small, so the construction shrinks, and it stays hom-free
    auto d = decompose(a);
    for (const auto& s : d.strings)
        if (s.k() == 4) {
            SubgraphRef fs;
            fs.vertices = {s.endpoint_a, s.endpoint_b};
            std::vector<int> phis(16, -1);
            phis[static_cast<size_t>(s.endpoint_a)] = 0;
            int i = 1;
            for (int x : s.internal) {
                fs.vertices.push_back(x);
                phis[static_cast<size_t>(x)] = i % 2;
                ++i;
            }
            phis[static_cast<size_t>(s.endpoint_b)] = i % 2;
            std::sort(fs.vertices.begin(), fs.vertices.end());
            int prev = s.endpoint_a;
            for (int x : s.internal) {
                fs.edges.emplace_back(prev, x);
                prev = x;
            }
            fs.edges.emplace_back(prev, s.endpoint_b);
            std::sort(fs.edges.begin(), fs.edges.end());
            auto rs = build_G_F_phi(a, fs, c7, phis);
            CHECK(rs.graph.vertex_count() == 12);  // 10 kept + 2 image colors
            CHECK(!solve_hom(rs.graph, c7).found());
            break;
        }

    // errors: phi must cover exactly V(F) and preserve edges
    CHECK_THROWS_AS(build_G_F_phi(a, f, c7, std::vector<int>(16, -1)), std::invalid_argument);
    SubgraphRef fedge;
    fedge.vertices = {0, 1};
    fedge.edges = {Edge(0, 1)};
    std::vector<int> bad(16, -1);
    bad[0] = 0;
    bad[1] = 3;  // not adjacent in C7
    CHECK_THROWS_AS(build_G_F_phi(a, fedge, c7, bad), std::invalid_argument);
    CHECK_THROWS_AS(build_G_F_phi(a, whole_graph(a), c7, std::vector<int>(16, 0)), std::invalid_argument);
}

TEST_CASE("find_extension identity") {
    Graph c7 = Graph::cycle(7);
    Graph a = tight_c7_examples()[0].graph;
    SubgraphRef f;
    f.vertices = {0, 1};
    f.edges = {Edge(0, 1)};
    std::vector<int> phi(16, -1);
    phi[0] = 0;
    phi[1] = 1;
    auto w = find_extension(a, c7, f, phi);
    CHECK(potential(w.extension) == potential(w.f) + potential(w.extender) - potential(w.source));
    CHECK(w.extension.v() == w.f.v() + w.extender.v() - w.source.v());
    CHECK(w.extension.e() == w.f.e() + w.extender.e() - w.source.e());

    // degenerate F = G is rejected
    CHECK_THROWS_AS(find_extension(Graph::cycle(3), Graph::cycle(7), whole_graph(Graph::cycle(3)),
                                   std::vector<int>{0, 1, 2}),
                    std::invalid_argument);
}

TEST_CASE("potential scan") {
    PotentialParams p;
    auto c7scan = subgraph_potential_scan(Graph::cycle(7), p, 7);
    CHECK(c7scan.min_potential == Rational(14));
    CHECK(c7scan.argmin_is_whole_graph);
    CHECK(c7scan.argmin_is_cycle);

    auto fig = subgraph_potential_scan(tight_c7_examples()[0].graph, p, 7);
    CHECK(fig.min_potential == Rational(14));
    CHECK(fig.argmin_is_cycle);
    CHECK(fig.argmin_vertices.size() == 7);

    auto k4 = subgraph_potential_scan(Graph::complete(4), p, 3);
    CHECK(k4.min_potential == Rational(6));
    CHECK(k4.argmin_vertices.size() == 3);

    CHECK_THROWS_AS(subgraph_potential_scan(Graph::cycle(7), p, 40), std::invalid_argument);
}

TEST_CASE("potential scan agrees with subset brute force") {
    std::mt19937 rng(41);
    PotentialParams params;
    for (int round = 0; round < 25; ++round) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = testing::random_graph(rng, n, 0.5);
        int limit = 2 + static_cast<int>(rng() % (n - 1));
        // brute force over all vertex subsets
        bool have = false;
        Rational best;
        for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
            if (__builtin_popcountll(mask) > limit) continue;
            std::vector<int> vs;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) vs.push_back(v);
            auto sub = induced_subgraph(g, vs).graph;
            if (!is_connected(sub)) continue;
            Rational pv = potential(sub, params);
            if (!have || pv < best) {
                best = pv;
                have = true;
            }
        }
        auto scan = subgraph_potential_scan(g, params, limit);
        REQUIRE(have);
        CHECK(scan.min_potential == best);
    }
}
