#include "oddhom/criticality.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace oddhom {

namespace {

Graph without_edge(const Graph& g, const Edge& e) { return delete_edge(g, e.u, e.v); }

} // namespace

CriticalityReport is_critical(const Graph& g, const Graph& h, const CriticalityOptions& options) {
    CriticalityReport report;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) report.isolated_vertices.push_back(v);

    TargetContext target{h};
    HomSearchResult base = solve_hom(g, target);
    if (base.found()) {
        report.verdict = Verdict::not_hom_free;
        report.is_hom_free = false;
        report.hom = base.witness;
        return report;
    }
    report.is_hom_free = true;

    const auto edges = g.edges();
    std::vector<char> still_hom_free(edges.size(), 0);
    auto probe = [&](size_t i) { still_hom_free[i] = !solve_hom(without_edge(g, edges[i]), target).found(); };

    int threads = std::max(1, options.threads);
    if (threads == 1) {
        for (size_t i = 0; i < edges.size(); ++i) {
            probe(i);
            if (still_hom_free[i]) break;  // lexicographically first failure
        }
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int tix = 0; tix < threads; ++tix)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < edges.size(); i = next.fetch_add(1)) probe(i);
            });
        for (auto& th : pool) th.join();
    }

    for (size_t i = 0; i < edges.size(); ++i) {
        if (still_hom_free[i]) {
            report.verdict = Verdict::not_minimal;
            report.failing_edge = edges[i];
            return report;
        }
    }
    if (!report.isolated_vertices.empty()) {
        // hom-free and edge-minimal, but dropping an isolated vertex is a
        // proper hom-free subgraph
        report.verdict = Verdict::not_minimal;
        return report;
    }
    report.verdict = Verdict::critical;
    return report;
}

CriticalSubgraph extract_critical_subgraph_ref(const Graph& g, const Graph& h) {
    TargetContext target{h};
    if (solve_hom(g, target).found())
        throw std::invalid_argument("extract_critical_subgraph: graph admits a homomorphism");

    Graph current = g;
    for (const Edge& e : g.edges()) {
        if (!current.has_edge(e.u, e.v)) continue;
        Graph candidate = without_edge(current, e);
        if (!solve_hom(candidate, target).found()) current = std::move(candidate);
    }
    CriticalSubgraph out;
    out.edges = current.edges();
    for (int v = 0; v < current.vertex_count(); ++v)
        if (current.degree(v) > 0) out.vertices.push_back(v);
    out.graph = induced_subgraph(current, out.vertices).graph;
    return out;
}

Graph extract_critical_subgraph(const Graph& g, const Graph& h) {
    return extract_critical_subgraph_ref(g, h).graph;
}

} // namespace oddhom
