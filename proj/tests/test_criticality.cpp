#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oddhom/criticality.hpp"
#include "oddhom/enumerate.hpp"
#include "oddhom/structure.hpp"
#include "oddhom/verification.hpp"

using namespace oddhom;

TEST_CASE("odd cycles against odd cycle targets") {
    // C_{2k+1} is C_{2t+1}-critical exactly when k < t
    for (int t = 1; t <= 5; ++t) {
        Graph target = Graph::cycle(2 * t + 1);
        for (int k = 1; k <= 5; ++k) {
            auto report = is_critical(Graph::cycle(2 * k + 1), target);
            if (k < t) {
                CHECK(report.verdict == Verdict::critical);
            } else {
                CHECK(report.verdict == Verdict::not_hom_free);
                CHECK(!report.is_hom_free);
            }
        }
    }
}

TEST_CASE("basic verdicts") {
    Graph c7 = Graph::cycle(7);
    CHECK(is_critical(Graph::cycle(3), c7).verdict == Verdict::critical);
    CHECK(is_critical(Graph::cycle(9), c7).verdict == Verdict::not_hom_free);
    // K4 is hom-free but not edge-minimal
    auto k4 = is_critical(Graph::complete(4), c7);
    CHECK(k4.verdict == Verdict::not_minimal);
    CHECK(k4.is_hom_free);
    REQUIRE(k4.failing_edge.has_value());
    CHECK(*k4.failing_edge == Edge(0, 1));
}

TEST_CASE("tight examples are critical") {
    Graph c7 = Graph::cycle(7);
    for (const auto& doc : tight_c7_examples()) {
        auto report = is_critical(doc.graph, c7);
        CHECK(report.verdict == Verdict::critical);
        CHECK(report.is_hom_free);
    }
}

TEST_CASE("parallel edge probing matches sequential") {
    Graph c7 = Graph::cycle(7);
    Graph a = tight_c7_examples()[0].graph;
    CriticalityOptions four;
    four.threads = 4;
    CHECK(is_critical(a, c7, four).verdict == Verdict::critical);
    auto k4s = is_critical(Graph::complete(4), c7, four);
    CHECK(k4s.verdict == Verdict::not_minimal);
    CHECK(*k4s.failing_edge == Edge(0, 1));
}

TEST_CASE("isolated vertices spoil criticality") {
    // C3 plus an isolated vertex
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}});
    auto report = is_critical(g, Graph::cycle(7));
    CHECK(report.verdict == Verdict::not_minimal);
    CHECK(report.isolated_vertices == std::vector<int>{3});
}

TEST_CASE("extraction basics") {
    Graph c7 = Graph::cycle(7);
    // C3 with a pendant path reduces to C3
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
    Graph w = extract_critical_subgraph(g, c7);
    CHECK(w == Graph::cycle(3));

    // disjoint C3 and C5: deterministic winner given the lexicographic order
    Graph two = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}});
    Graph kept = extract_critical_subgraph(two, c7);
    CHECK(kept.vertex_count() == 5);
    CHECK(kept.edge_count() == 5);

    CHECK_THROWS_AS(extract_critical_subgraph(Graph::cycle(9), c7), std::invalid_argument);
}

TEST_CASE("extraction output is critical") {
    std::mt19937 rng(17);
    Graph c7 = Graph::cycle(7);
    int extracted = 0;
    for (int round = 0; round < 200; ++round) {
        int n = 5 + static_cast<int>(rng() % 8);
        Graph g = testing::random_graph(rng, n, 0.35);
        if (solve_hom(g, c7).found()) continue;
        Graph w = extract_critical_subgraph(g, c7);
        ++extracted;
        auto report = is_critical(w, c7);
        CHECK(report.verdict == Verdict::critical);
    }
    CHECK(extracted > 20);
}

TEST_CASE("critical graphs pass the structural audit") {
    Graph c7 = Graph::cycle(7);
    std::mt19937 rng(19);
    std::vector<Graph> criticals{Graph::cycle(3), Graph::cycle(5)};
    for (int round = 0; round < 60; ++round) {
        Graph g = testing::random_graph(rng, 8, 0.4);
        if (solve_hom(g, c7).found()) continue;
        criticals.push_back(extract_critical_subgraph(g, c7));
    }
    for (const Graph& g : criticals) {
        auto audit = audit_lemmas(g, 3);
        for (const char* name : {"two-connected", "max-string-length", "string-parity", "vertex-weight",
                                 "cell-weight"}) {
            auto* entry = audit.find(name);
            REQUIRE(entry != nullptr);
            CHECK(entry->status != AuditStatus::fails);
        }
    }
}

TEST_CASE("verdicts match a brute-force oracle on every small candidate") {
    // ground truth computed with the plain exhaustive hom search only
    for (int t : {1, 2, 3}) {
        Graph target = Graph::cycle(2 * t + 1);
        for (int n = 3; n <= 6; ++n) {
            for (const Graph& g : all_graphs_up_to_iso(n)) {
                if (g.min_degree() < 2 || !is_connected(g)) continue;
                bool hom_free = !testing::brute_force_has_hom(g, target);
                bool minimal = true;
                for (const Edge& e : g.edges())
                    minimal = minimal && testing::brute_force_has_hom(delete_edge(g, e.u, e.v), target);
                Verdict expected =
                    !hom_free ? Verdict::not_hom_free : (minimal ? Verdict::critical : Verdict::not_minimal);
                CHECK(is_critical(g, target).verdict == expected);
            }
        }
    }
}

TEST_CASE("subdivided K8 has a critical subgraph") {
    Graph g = subdivide_all(Graph::complete(8), 4);
    Graph c7 = Graph::cycle(7);
    Graph w = extract_critical_subgraph(g, c7);
    CHECK(is_critical(w, c7).verdict == Verdict::critical);
}
