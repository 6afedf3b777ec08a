#pragma once

#include <string>
#include <vector>

#include "oddhom/graph.hpp"

namespace oddhom {

/// Maximal path whose internal vertices have degree 2 and whose endpoints
/// have degree >= 3. k = number of internal vertices; a 0-string is an edge
/// between two branch vertices. endpoint_a == endpoint_b marks a closed
/// string (a deg-2 chain leaving and re-entering the same branch vertex).
struct StringInfo {
    int endpoint_a = -1;
    int endpoint_b = -1;
    std::vector<int> internal;  // ordered from endpoint_a to endpoint_b

    int k() const { return static_cast<int>(internal.size()); }
    int edge_length() const { return k() + 1; }
    bool closed() const { return endpoint_a == endpoint_b; }
    bool has_endpoint(int v) const { return endpoint_a == v || endpoint_b == v; }
    int other_endpoint(int v) const { return endpoint_a == v ? endpoint_b : endpoint_a; }
};

/// A k-string is short if k <= 2; only short strings carry charge in the
/// discharging rules.
inline bool is_short_string(const StringInfo& s) { return s.k() <= 2; }

struct StringDecomposition {
    std::vector<int> branch_vertices;            // degree >= 3, sorted
    std::vector<StringInfo> strings;
    std::vector<std::vector<int>> pure_cycles;   // components made only of degree-2 vertices
    std::vector<std::vector<int>> strings_at;    // vertex -> incident string indices (branch only)

    bool has_branch_vertices() const { return !branch_vertices.empty(); }
};

/// Partitions the graph into branch vertices, maximal strings, and pure
/// cycles. Rejects graphs with a vertex of degree <= 1.
StringDecomposition decompose(const Graph& g);

struct VertexProfile {
    int vertex = -1;
    int degree = 0;
    std::vector<int> type;  // internal counts of incident strings, descending
    int weight = 0;         // sum of type
};

/// Type and weight of a branch vertex. Errors if deg(v) < 3 or if a closed
/// string is incident (type is ill-defined there).
VertexProfile vertex_profile(const Graph& g, const StringDecomposition& d, int v);
VertexProfile vertex_profile(const Graph& g, int v);

/// All simple cycles of exactly `length` edges, each as a vertex sequence
/// starting at its smallest vertex; deterministic order.
std::vector<std::vector<int>> cycles_of_length(const Graph& g, int length);

/// A (2t+1)-cycle together with the strings hanging off it. A string is
/// incident when it is not contained in the cycle and has an endpoint on it.
struct Cell {
    std::vector<int> vertices;           // cyclic order, starts at smallest vertex
    std::vector<int> incident_strings;   // indices into the decomposition
    int degree = 0;                      // number of incident strings
    std::vector<int> type;               // their internal counts, descending
    int weight = 0;
    bool has_string_data = false;        // false when the graph has degree-<=1 vertices
};

std::vector<Cell> find_cells(const Graph& g, int t);
std::vector<Cell> find_cells(const Graph& g, const StringDecomposition& d, int t);

enum class AuditStatus { holds, fails, not_applicable };

struct AuditEntry {
    std::string name;
    AuditStatus status = AuditStatus::not_applicable;
    std::string detail;               // human-readable witness / reason
    std::vector<int> witness_vertices;
    std::vector<Edge> witness_edges;
};

/// Structural facts that hold for C_{2t+1}-critical graphs (and, for the
/// cycle-intersection ones, for a hypothetical minimum counterexample). The
/// audit is diagnostic: a failure is a concrete witness, not a contradiction,
/// unless the input is known critical.
struct LemmaAudit {
    int t = 3;
    std::vector<AuditEntry> entries;

    const AuditEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
    bool all_hold_or_na() const {
        for (const auto& e : entries)
            if (e.status == AuditStatus::fails) return false;
        return true;
    }
};

/// Checks: two-connected, min-girth, max-string-length, string-parity,
/// vertex-weight, strings-in-cells, cell-weight, cell-min-degree,
/// cell-disjointness, cell-long-cycle-edge-disjoint, long-cycle-intersection.
LemmaAudit audit_lemmas(const Graph& g, int t);

} // namespace oddhom
