#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddhom/graph.hpp"
#include "oddhom/rational.hpp"

namespace oddhom {

/// Label-invariant canonical labeling: degree-refinement partition, then a
/// pruned permutation search within the cells for the lexicographically
/// largest adjacency bit string. Supported up to 10 vertices.
std::vector<int> canonical_labeling(const Graph& g);  // position -> original vertex
Graph canonical_graph(const Graph& g);
std::string canonical_form(const Graph& g);  // opaque bytes; equal iff isomorphic

/// Every isomorphism class of graphs on exactly n labeled vertices, generated
/// by edge addition over canonical forms (each class with k+1 edges arises
/// from a class with k edges, so the level-by-level closure is exhaustive).
std::vector<Graph> all_graphs_up_to_iso(int n);

struct CriticalRecord {
    std::string g6;  // canonical labeling, graph6
    int n = 0;
    long long e = 0;
    Rational potential_17_15;
};

struct EnumerationResult {
    int t = 3;
    int n_max = 0;
    bool pruned = false;
    std::vector<CriticalRecord> critical;       // sorted by canonical form
    std::map<int, long long> candidates_per_n;  // min degree >= 2, connected
    std::map<int, long long> critical_per_n;
    std::optional<Rational> min_potential;      // over the critical graphs found
    std::vector<std::string> errors;            // stream issues, one per bad line
    long long lines_read = 0;
};

struct EnumerationOptions {
    int n_max = 8;
    /// Skip candidates that provably cannot be critical (not 2-connected, or
    /// a short odd cycle sitting inside a larger graph) before running the
    /// full criticality test.
    bool pruning = false;
    int threads = 1;
};

/// Exhaustive search for C_{2t+1}-critical graphs among connected graphs with
/// min degree 2 on at most n_max <= 8 vertices.
EnumerationResult enumerate_critical(int t, const EnumerationOptions& options = {});

/// Criticality filter over a graph6 stream; malformed lines are recorded with
/// their line number and processing continues. Deduplication up to
/// isomorphism applies where the canonical form is available (n <= 10);
/// larger graphs are deduplicated by their literal encoding.
EnumerationResult stream_critical(int t, std::istream& in);

} // namespace oddhom
