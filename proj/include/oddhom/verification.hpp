#pragma once

#include <random>
#include <string>
#include <vector>

#include "oddhom/formats.hpp"
#include "oddhom/graph.hpp"

namespace oddhom {

/// The three known 16-vertex C7-critical graphs that meet the density bound
/// with equality (potential 2): two 7-cycles sharing an edge plus a 4-string
/// joining them at three different attachment pairs.
std::vector<GraphDocument> tight_c7_examples();

/// Two hub vertices joined by three internally disjoint paths with k1, k2,
/// and k3 internal vertices.
Graph theta_graph(int k1, int k2, int k3);

Graph petersen();
Graph dodecahedron();

/// Random planar cubic 2-connected graph: grown from K4 by repeatedly
/// subdividing two distinct edges on a common face and joining the two new
/// vertices across that face. Planarity and 3-regularity hold by
/// construction; no embedder is involved.
Graph random_planar_cubic(std::mt19937& rng, int expansions);

struct CheckResult {
    std::string id;
    std::string description;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

struct VerifyOptions {
    int threads = 1;
};

/// The full verification suite: tight examples, the subdivision pipeline,
/// exhaustive small-graph search, extension-set law, structural facts,
/// discharging invariants, potential-identity sampling, the high-girth
/// solver smoke test, and the one-rule density discharge.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

} // namespace oddhom
