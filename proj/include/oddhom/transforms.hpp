#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddhom/graph.hpp"
#include "oddhom/rational.hpp"

namespace oddhom {

struct FoldAttempt {
    int pivot = -1;  // index i into the face; merged face[i-1] and face[i+1]
    std::string reason;
    std::optional<int> resulting_odd_girth;
};

struct FoldOutcome {
    std::optional<Graph> folded;
    int pivot = -1;
    VertexMap map;
    std::vector<FoldAttempt> attempts;  // every pivot tried before success

    bool ok() const { return folded.has_value(); }
};

/// One folding step: given a facial cycle of length r != k in a graph of odd
/// girth k, tries each pivot i and keeps the first identification of
/// face[i-1], face[i+1] that preserves the odd girth. Faciality is the
/// caller's claim and is not verified (no embedder here); when no pivot
/// works, every attempt is reported instead of failing hard.
FoldOutcome fold_face(const Graph& g, const std::vector<int>& face, int k);

/// Subdivides every edge (2t-2) times; for a (2t+2)-critical base this
/// produces a C_{2t+1}-critical graph.
Graph ore_subdivide(const Graph& g, int t);

struct OreDensityReport {
    int t = 3;
    long long vertices = 0;
    long long edges = 0;
    Rational formula_value;  // (t(2t+3)v - (t+1)(2t-1)) / (2t^2+2t-1)
    bool equality = false;
};

OreDensityReport ore_density_check(const Graph& g_subdivided, int t);

} // namespace oddhom
