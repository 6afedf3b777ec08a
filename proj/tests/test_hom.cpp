#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oddhom/hom.hpp"
#include "oddhom/verification.hpp"

using namespace oddhom;

TEST_CASE("extension sets on C7") {
    Graph c7 = Graph::cycle(7);
    auto one = extension_set(c7, 0, 1);
    CHECK(one.colors() == std::vector<int>{1, 6});

    auto five = extension_set(c7, 0, 5);
    CHECK(five.size() == 6);
    CHECK(!five.contains(0));

    auto six = extension_set(c7, 0, 6);
    CHECK(six.size() == 7);

    auto zero = extension_set(c7, 3, 0);
    CHECK(zero.colors() == std::vector<int>{3});

    CHECK_THROWS_AS(extension_set(c7, 9, 1), std::invalid_argument);
}

TEST_CASE("extension set closed form matches walk enumeration") {
    std::mt19937 rng(1);
    // even cycles exercise the closed form too; the size bound is an
    // odd-cycle fact only
    for (int n = 3; n <= 11; ++n) {
        Graph h = Graph::cycle(n);
        // also exercise a relabeled copy so the cycle order is nontrivial
        Graph shuffled = testing::relabel(rng, h);
        for (const Graph& target : {h, shuffled})
            for (int start = 0; start < n; ++start)
                for (int len = 0; len <= 10; ++len) {
                    auto got = extension_set(target, start, len);
                    auto want = testing::walk_ends(target, start, len);
                    auto got_colors = got.colors();
                    CHECK(std::set<int>(got_colors.begin(), got_colors.end()) == want);
                    if (len >= 1 && n % 2 == 1) CHECK(got.size() >= std::min(len + 1, n));
                }
    }
}

TEST_CASE("extension set on a non-cycle target") {
    // a path target exercises the generic route
    Graph p4 = Graph::path(4);
    auto got = extension_set(p4, 0, 2);
    CHECK(got.colors() == std::vector<int>{0, 2});
    auto got_colors = got.colors();
    CHECK(std::set<int>(got_colors.begin(), got_colors.end()) == testing::walk_ends(p4, 0, 2));
}

TEST_CASE("odd cycle neighborhood expansion") {
    // |N(S)| > |S| for every nonempty proper subset of an odd cycle
    for (int n = 3; n <= 11; n += 2) {
        Graph c = Graph::cycle(n);
        for (std::uint64_t mask = 1; mask < (1ULL << n) - 1; ++mask) {
            std::set<int> nb;
            int size = 0;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) {
                    ++size;
                    for (int w : c.neighbors(v)) nb.insert(w);
                }
            CHECK(static_cast<int>(nb.size()) > size);
        }
    }
}

TEST_CASE("find_hom basics") {
    Graph c7 = Graph::cycle(7);
    auto r1 = find_hom(Graph::cycle(9), c7);
    REQUIRE(r1.found());
    CHECK(verify_homomorphism(Graph::cycle(9), c7, *r1.witness));

    CHECK(find_hom(Graph::complete(4), c7).status == SolveStatus::none);

    // bipartite graphs land on an edge
    Graph grid = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto r2 = find_hom(grid, c7);
    REQUIRE(r2.found());
    CHECK(verify_homomorphism(grid, c7, *r2.witness));

    // budget exhaustion is a distinct outcome
    auto r3 = find_hom(subdivide_all(Graph::complete(8), 4), c7, 10);
    CHECK(r3.status == SolveStatus::budget_exhausted);
}

TEST_CASE("contract_strings shapes") {
    Graph c7 = Graph::cycle(7);
    auto inst = contract_strings(subdivide_all(Graph::complete(8), 4), c7);
    CHECK(inst.variables.size() == 8);
    CHECK(inst.constraints.size() == 28);
    // a 4-string over C7 relates exactly the distinct color pairs
    for (const auto& c : inst.constraints)
        for (int x = 0; x < 7; ++x) CHECK(c.rel[static_cast<size_t>(x)] == (0x7FULL & ~(1ULL << x)));

    auto theta = contract_strings(theta_graph(1, 2, 3), c7);
    CHECK(theta.variables.size() == 2);
    CHECK(theta.constraints.size() == 1);  // three parallel relations intersected

    auto cyc = contract_strings(Graph::cycle(7), c7);
    CHECK(cyc.variables.empty());
    REQUIRE(cyc.strings.pure_cycles.size() == 1);

    CHECK_THROWS_AS(contract_strings(Graph::path(4), c7), std::invalid_argument);
}

TEST_CASE("solve_contracted and lift") {
    Graph c7 = Graph::cycle(7);
    TargetContext ctx(c7);

    Graph s8 = subdivide_all(Graph::complete(8), 4);
    auto inst = contract_strings(s8, ctx);
    CHECK(solve_contracted(inst, ctx).status == SolveStatus::none);

    Graph s8e = subdivide_all(delete_edge(Graph::complete(8), 0, 1), 4);
    auto inst2 = contract_strings(s8e, ctx);
    auto sol = solve_contracted(inst2, ctx);
    REQUIRE(sol.status == SolveStatus::found);
    Homomorphism full = lift(inst2, sol.colors, s8e, ctx);
    CHECK(verify_homomorphism(s8e, c7, full));

    // cycle special case: feasibility is walk arithmetic
    auto c9 = contract_strings(Graph::cycle(9), ctx);
    auto c9sol = solve_contracted(c9, ctx);
    REQUIRE(c9sol.status == SolveStatus::found);
    CHECK(verify_homomorphism(Graph::cycle(9), c7, lift(c9, c9sol.colors, Graph::cycle(9), ctx)));
    auto c5 = contract_strings(Graph::cycle(5), ctx);
    CHECK(solve_contracted(c5, ctx).status == SolveStatus::none);

    // an instance with no constraints: any color works
    ContractedInstance free_inst;
    free_inst.variables = {0};
    free_inst.domains = {ctx.full_mask()};
    free_inst.source_vertices = 1;
    free_inst.target_vertices = 7;
    auto sol3 = solve_contracted(free_inst, ctx);
    REQUIRE(sol3.status == SolveStatus::found);
    CHECK(sol3.colors.size() == 1);

    // parallel arms whose relations intersect to nothing (the theta contains
    // a triangle)
    auto inst4 = contract_strings(theta_graph(0, 1, 2), ctx);
    CHECK(solve_contracted(inst4, ctx).status == SolveStatus::none);

    // a feasible theta (arms of 3, 4, 5 edges force hub distance 3) lifts to
    // a full map, verified edge by edge
    Graph th = theta_graph(2, 3, 4);
    auto inst5 = contract_strings(th, ctx);
    auto sol5 = solve_contracted(inst5, ctx);
    REQUIRE(sol5.status == SolveStatus::found);
    Homomorphism hth = lift(inst5, sol5.colors, th, ctx);
    CHECK(verify_homomorphism(th, c7, hth));
    // hub colors sit at cyclic distance 3
    int d = std::abs(hth.map[0] - hth.map[1]);
    CHECK(std::min(d, 7 - d) == 3);
}

TEST_CASE("contracted solver budget is a distinct outcome") {
    Graph c7 = Graph::cycle(7);
    TargetContext ctx(c7);
    auto inst = contract_strings(subdivide_all(Graph::complete(8), 4), ctx);
    auto sol = solve_contracted(inst, ctx, std::uint64_t{2});
    CHECK(sol.status == SolveStatus::budget_exhausted);
}

TEST_CASE("subdivided K6 lifts against C5") {
    Graph c5 = Graph::cycle(5);
    TargetContext ctx(c5);
    Graph g = subdivide_all(delete_edge(Graph::complete(6), 0, 1), 2);
    auto inst = contract_strings(g, ctx);
    auto sol = solve_contracted(inst, ctx);
    REQUIRE(sol.status == SolveStatus::found);
    CHECK(verify_homomorphism(g, c5, lift(inst, sol.colors, g, ctx)));
}

TEST_CASE("solve_hom handles stripping and components") {
    Graph c7 = Graph::cycle(7);
    // C3 with a pendant path: still no homomorphism
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(solve_hom(g, c7).status == SolveStatus::none);
    // a tree maps fine
    auto tree = solve_hom(Graph::path(6), c7);
    REQUIRE(tree.found());
    CHECK(verify_homomorphism(Graph::path(6), c7, *tree.witness));
    // disjoint C9 and C11
    Graph two = Graph::from_edges(20, [] {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 9; ++i) es.emplace_back(i, (i + 1) % 9);
        for (int i = 0; i < 11; ++i) es.emplace_back(9 + i, 9 + (i + 1) % 11);
        return es;
    }());
    auto r = solve_hom(two, c7);
    REQUIRE(r.found());
    CHECK(verify_homomorphism(two, c7, *r.witness));
    // empty graph
    CHECK(solve_hom(Graph(0), c7).found());
    // isolated vertices only
    CHECK(solve_hom(Graph(3), c7).found());
}

TEST_CASE("direct search and contraction agree on random graphs") {
    std::mt19937 rng(77);
    Graph c7 = Graph::cycle(7);
    TargetContext ctx(c7);
    int homs = 0;
    for (int round = 0; round < 500; ++round) {
        int n = 5 + static_cast<int>(rng() % 10);  // up to 14
        Graph g = testing::random_min_degree_2(rng, n, 0.22);
        auto direct = find_hom(g, c7);
        REQUIRE(direct.status != SolveStatus::budget_exhausted);
        auto inst = contract_strings(g, ctx);
        auto contracted = solve_contracted(inst, ctx);
        CHECK(direct.found() == (contracted.status == SolveStatus::found));
        if (direct.found()) {
            ++homs;
            CHECK(verify_homomorphism(g, c7, *direct.witness));
            CHECK(verify_homomorphism(g, c7, lift(inst, contracted.colors, g, ctx)));
        }
        // the odd-girth obstruction agrees with the solver
        auto og = odd_girth(g);
        if (og && *og < 7) CHECK(!direct.found());
    }
    CHECK(homs > 0);  // the sample must exercise both outcomes
}

TEST_CASE("solve_hom against brute force on tiny graphs") {
    std::mt19937 rng(31);
    for (int round = 0; round < 200; ++round) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = testing::random_graph(rng, n, 0.45);
        Graph h = Graph::cycle(3 + 2 * static_cast<int>(rng() % 3));
        CHECK(solve_hom(g, h).found() == testing::brute_force_has_hom(g, h));
    }
}
