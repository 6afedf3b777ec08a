#pragma once

#include <optional>
#include <vector>

#include "oddhom/graph.hpp"
#include "oddhom/hom.hpp"

namespace oddhom {

enum class Verdict { critical, not_hom_free, not_minimal };

struct CriticalityReport {
    Verdict verdict = Verdict::not_hom_free;
    bool is_hom_free = false;
    /// For not_minimal: an edge whose deletion still leaves no homomorphism.
    std::optional<Edge> failing_edge;
    /// For not_hom_free: a witness homomorphism on the input graph.
    std::optional<Homomorphism> hom;
    /// Isolated vertices found (a graph with isolated vertices is never
    /// critical; the edge test runs on the stripped graph).
    std::vector<int> isolated_vertices;
};

struct CriticalityOptions {
    int threads = 1;  // the edge-deletion subproblems are independent
};

/// G is H-critical iff G has no homomorphism to H and every single-edge
/// deletion admits one. On an isolate-free graph those two conditions decide
/// criticality, because every proper subgraph embeds in some G - e and
/// homomorphisms restrict.
CriticalityReport is_critical(const Graph& g, const Graph& h, const CriticalityOptions& options = {});

/// A critical subgraph, identified by vertex/edge sets of the host graph.
struct CriticalSubgraph {
    Graph graph;
    std::vector<int> vertices;  // host ids, sorted
    std::vector<Edge> edges;    // host coordinates
};

/// Greedily deletes edges (lexicographic order) whose removal keeps the graph
/// homomorphism-free, then drops isolated vertices. Requires G hom-free.
CriticalSubgraph extract_critical_subgraph_ref(const Graph& g, const Graph& h);
Graph extract_critical_subgraph(const Graph& g, const Graph& h);

} // namespace oddhom
