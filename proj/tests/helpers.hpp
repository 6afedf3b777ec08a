#pragma once

#include <random>
#include <set>
#include <vector>

#include "oddhom/graph.hpp"

namespace oddhom::testing {

/// Erdos-Renyi-ish random graph with a fixed seed.
inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

/// Random graph patched to minimum degree 2 by attaching extra edges from
/// deficient vertices to random partners.
inline Graph random_min_degree_2(std::mt19937& rng, int n, double p) {
    Graph g = random_graph(rng, n, p);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    std::vector<int> degree(static_cast<size_t>(n), 0);
    for (auto& [u, v] : edges) {
        degree[static_cast<size_t>(u)]++;
        degree[static_cast<size_t>(v)]++;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int v = 0; v < n; ++v) {
        while (degree[static_cast<size_t>(v)] < 2) {
            int w = pick(rng);
            if (w == v) continue;
            bool dup = false;
            for (auto& [a, b] : edges)
                dup |= (a == v && b == w) || (a == w && b == v);
            if (dup) continue;
            edges.emplace_back(v, w);
            degree[static_cast<size_t>(v)]++;
            degree[static_cast<size_t>(w)]++;
        }
    }
    return Graph::from_edges(n, edges);
}

/// Apply a random permutation to the vertex labels.
inline Graph relabel(std::mt19937& rng, const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges())
        edges.emplace_back(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]);
    return Graph::from_edges(n, edges);
}

/// Reference homomorphism decision: plain exhaustive assignment without any
/// of the production solver's machinery. Only usable for tiny graphs.
inline bool brute_force_has_hom(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    if (h.vertex_count() == 0) return n == 0;
    std::vector<int> map(static_cast<size_t>(n), -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < h.vertex_count(); ++c) {
            bool ok = true;
            for (int w : g.neighbors(v)) {
                if (w < v && !h.has_edge(c, map[static_cast<size_t>(w)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<size_t>(v)] = c;
            if (self(self, v + 1)) return true;
        }
        map[static_cast<size_t>(v)] = -1;
        return false;
    };
    return rec(rec, 0);
}

/// Independent walk-set oracle for extension sets.
inline std::set<int> walk_ends(const Graph& h, int start, int edges) {
    std::set<int> cur{start};
    for (int i = 0; i < edges; ++i) {
        std::set<int> next;
        for (int c : cur)
            for (int w : h.neighbors(c)) next.insert(w);
        cur = std::move(next);
    }
    return cur;
}

} // namespace oddhom::testing
