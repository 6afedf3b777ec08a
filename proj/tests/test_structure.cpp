#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oddhom/structure.hpp"
#include "oddhom/verification.hpp"

using namespace oddhom;

TEST_CASE("decompose theta graph") {
    // arms with 1, 2, 3 internal vertices
    Graph g = theta_graph(1, 2, 3);
    auto d = decompose(g);
    CHECK(d.branch_vertices == std::vector<int>{0, 1});
    REQUIRE(d.strings.size() == 3);
    std::multiset<int> ks;
    for (const auto& s : d.strings) {
        ks.insert(s.k());
        CHECK(s.endpoint_a == 0);
        CHECK(s.endpoint_b == 1);
    }
    CHECK(ks == std::multiset<int>{1, 2, 3});
    CHECK(d.pure_cycles.empty());
}

TEST_CASE("decompose pure cycle and partition invariant") {
    auto d = decompose(Graph::cycle(9));
    CHECK(d.branch_vertices.empty());
    CHECK(d.strings.empty());
    REQUIRE(d.pure_cycles.size() == 1);
    CHECK(d.pure_cycles[0].size() == 9);

    std::mt19937 rng(2);
    for (int round = 0; round < 50; ++round) {
        Graph g = testing::random_min_degree_2(rng, 10, 0.25);
        auto dd = decompose(g);
        size_t covered = dd.branch_vertices.size();
        for (const auto& s : dd.strings) covered += s.internal.size();
        for (const auto& c : dd.pure_cycles) covered += c.size();
        CHECK(covered == static_cast<size_t>(g.vertex_count()));
    }
}

TEST_CASE("decompose rejects low-degree vertices") {
    CHECK_THROWS_AS(decompose(Graph::path(4)), std::invalid_argument);
}

TEST_CASE("tight example decomposition") {
    Graph g = tight_c7_examples()[0].graph;
    auto d = decompose(g);
    CHECK(d.branch_vertices == std::vector<int>{0, 1, 6, 11});
    std::multiset<int> ks;
    for (const auto& s : d.strings) ks.insert(s.k());
    CHECK(ks == std::multiset<int>{0, 0, 0, 4, 4, 4});
}

TEST_CASE("vertex profiles") {
    Graph s8 = subdivide_all(Graph::complete(8), 4);
    auto p = vertex_profile(s8, 0);
    CHECK(p.degree == 7);
    CHECK(p.type == std::vector<int>{4, 4, 4, 4, 4, 4, 4});
    CHECK(p.weight == 28);
    // the bound (v(H)-2)deg - v(H) with H = C7 is met with equality
    CHECK(p.weight == 5 * 7 - 7);

    Graph a = tight_c7_examples()[0].graph;
    auto pa = vertex_profile(a, 1);
    CHECK(pa.type == std::vector<int>{4, 4, 0});
    CHECK(pa.weight == 8);
    auto p0 = vertex_profile(a, 0);
    CHECK(p0.type == std::vector<int>{0, 0, 0});
    CHECK(p0.weight == 0);

    for (int v = 0; v < 4; ++v) CHECK(vertex_profile(Graph::complete(4), v).weight == 0);
    CHECK_THROWS_AS(vertex_profile(Graph::cycle(9), 0), std::invalid_argument);
}

TEST_CASE("closed strings are detected and rejected in profiles") {
    // two triangles sharing a vertex, their degree-2 chains close at vertex 2
    Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto d = decompose(bowtie);
    REQUIRE(d.strings.size() == 2);
    CHECK(d.strings[0].closed());
    CHECK(d.strings[1].closed());
    CHECK_THROWS_AS(vertex_profile(bowtie, d, 2), std::invalid_argument);
}

TEST_CASE("cycle enumeration") {
    CHECK(cycles_of_length(Graph::cycle(7), 7).size() == 1);
    CHECK(cycles_of_length(Graph::cycle(7), 5).empty());
    CHECK(cycles_of_length(Graph::complete(4), 3).size() == 4);
    CHECK(cycles_of_length(petersen(), 5).size() == 12);
}

TEST_CASE("cells of the tight example") {
    Graph a = tight_c7_examples()[0].graph;
    auto cells = find_cells(a, 3);
    // the hand edge list closes three 7-cycles around vertex 0, pairwise
    // sharing one of the edges at 0
    REQUIRE(cells.size() == 3);
    for (const auto& c : cells) {
        CHECK(c.degree == 3);
        CHECK(c.weight == 8);
        CHECK(c.type == std::vector<int>{4, 4, 0});
    }

    auto c7cells = find_cells(Graph::cycle(7), 3);
    REQUIRE(c7cells.size() == 1);
    CHECK(c7cells[0].degree == 0);
    CHECK(c7cells[0].weight == 0);

    CHECK(find_cells(subdivide_all(Graph::complete(8), 4), 3).empty());
}

TEST_CASE("cells of the other tight examples") {
    auto docs = tight_c7_examples();
    CHECK(find_cells(docs[1].graph, 3).size() == 2);
    CHECK(find_cells(docs[2].graph, 3).size() == 2);
}

TEST_CASE("find_cells is stable under relabeling") {
    std::mt19937 rng(13);
    Graph a = tight_c7_examples()[0].graph;
    auto reference = find_cells(a, 3);
    std::multiset<std::pair<int, int>> ref_stats;
    for (const auto& c : reference) ref_stats.insert({c.degree, c.weight});
    for (int round = 0; round < 20; ++round) {
        Graph g = testing::relabel(rng, a);
        auto cells = find_cells(g, 3);
        std::multiset<std::pair<int, int>> stats;
        for (const auto& c : cells) stats.insert({c.degree, c.weight});
        CHECK(stats == ref_stats);
    }
}

TEST_CASE("audit on a plain odd cycle") {
    auto audit = audit_lemmas(Graph::cycle(5), 3);
    CHECK(audit.find("two-connected")->status == AuditStatus::holds);
    CHECK(audit.find("max-string-length")->status == AuditStatus::not_applicable);
    CHECK(audit.find("vertex-weight")->status == AuditStatus::not_applicable);
    // C5 sits below the girth threshold for t=3
    CHECK(audit.find("min-girth")->status == AuditStatus::fails);
}

TEST_CASE("audit on the tight example") {
    Graph a = tight_c7_examples()[0].graph;
    auto audit = audit_lemmas(a, 3);
    CHECK(audit.find("two-connected")->status == AuditStatus::holds);
    CHECK(audit.find("min-girth")->status == AuditStatus::holds);
    CHECK(audit.find("max-string-length")->status == AuditStatus::holds);
    CHECK(audit.find("string-parity")->status == AuditStatus::holds);
    CHECK(audit.find("vertex-weight")->status == AuditStatus::holds);
    CHECK(audit.find("cell-weight")->status == AuditStatus::holds);
    // overlapping cells: a minimum-counterexample fact that concrete critical
    // graphs are allowed to violate
    auto* disjoint = audit.find("cell-disjointness");
    CHECK(disjoint->status == AuditStatus::fails);
    CHECK(!disjoint->witness_vertices.empty());
}

TEST_CASE("audit of the subdivided K6 at t=2") {
    Graph g = subdivide_all(Graph::complete(6), 2);
    auto audit = audit_lemmas(g, 2);
    CHECK(audit.find("vertex-weight")->status == AuditStatus::holds);
    // the bound (2t-1)deg - (2t+1) = 10 is met with equality
    CHECK(vertex_profile(g, 0).weight == 10);
    CHECK(audit.find("max-string-length")->status == AuditStatus::holds);
    CHECK(audit.find("two-connected")->status == AuditStatus::holds);
}

TEST_CASE("audit weight bound failure has a witness") {
    // a (5,5,4)-vertex violates the weight bound for t = 3
    Graph g = theta_graph(5, 5, 4);
    auto audit = audit_lemmas(g, 3);
    auto* ms = audit.find("max-string-length");
    CHECK(ms->status == AuditStatus::fails);
    auto* w = audit.find("vertex-weight");
    CHECK(w->status == AuditStatus::fails);
    CHECK(w->witness_vertices.size() == 1);
}
