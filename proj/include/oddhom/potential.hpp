#pragma once

#include <vector>

#include "oddhom/criticality.hpp"
#include "oddhom/graph.hpp"
#include "oddhom/hom.hpp"
#include "oddhom/rational.hpp"

namespace oddhom {

struct PotentialParams {
    Rational alpha{17};
    Rational beta{15};
};

/// p_{alpha,beta}(G) = alpha * v(G) - beta * e(G), exact.
Rational potential(const Graph& g, const PotentialParams& params = {});
Rational potential_of_counts(long long vertices, long long edges, const PotentialParams& params = {});

/// A subgraph given by explicit vertex and edge sets of a host graph.
struct SubgraphRef {
    std::vector<int> vertices;
    std::vector<Edge> edges;

    long long v() const { return static_cast<long long>(vertices.size()); }
    long long e() const { return static_cast<long long>(edges.size()); }
};

SubgraphRef whole_graph(const Graph& g);
/// Vertices must be distinct and present; edges must lie in g with both
/// endpoints listed.
void validate_subgraph(const Graph& g, const SubgraphRef& f);
Rational potential(const SubgraphRef& f, const PotentialParams& params = {});

struct DensityReport {
    int t = 3;
    long long vertices = 0;
    long long edges = 0;
    // e >= (17v - 2)/15, stated for t = 3 only
    bool main_applicable = false;
    bool main_holds = false;
    bool main_equality = false;
    // e >= (1 + 1/(4t)) v + 1/(3t), needs a vertex of degree >= 3
    bool basic_applicable = false;
    bool basic_holds = false;
    Rational basic_rhs;
    // e == (t(2t+3)v - (t+1)(2t-1)) / (2t^2+2t-1)
    bool ore_equality = false;
    Rational ore_rhs;
};

DensityReport density_predicates(const Graph& g, int t);

/// The replace-a-subgraph-by-its-image construction. The image vertices get
/// fresh ids appended after the surviving part of G; every G-edge from the
/// outside into F is re-routed to the image of its F endpoint.
struct GFphi {
    Graph graph;
    VertexMap map;                  // g-vertex -> new id (F vertices map to their image)
    std::vector<int> color_vertex;  // h-color -> new id, or -1 if unused
    std::vector<int> origin;        // new id -> g-vertex, or -1 for image vertices
    std::vector<int> image_color;   // new id -> h-color, or -1 for surviving vertices
    int kept_count = 0;             // ids below this are surviving G-vertices
};

/// phi: vector over V(G), -1 outside F, an H-color on V(F); must preserve
/// every edge of F.
GFphi build_G_F_phi(const Graph& g, const SubgraphRef& f, const Graph& h, const std::vector<int>& phi);

struct ExtensionWitness {
    SubgraphRef f;             // F, in G
    std::vector<int> phi;      // g-vertex -> color or -1
    GFphi construction;        // G_F[phi]
    SubgraphRef extender;      // W: critical subgraph of G_F[phi], its coordinates
    SubgraphRef source;        // X = W restricted to the image; vertices are H-colors
    SubgraphRef extension;     // F', in G
};

/// Builds G_F[phi], extracts a critical subgraph W, reads off the source X,
/// and reconstructs the extension F' in G with one representative edge per
/// re-routed W-edge (smallest preimage wins). Errors if G_F[phi] admits a
/// homomorphism, which cannot happen when G is H-critical.
ExtensionWitness find_extension(const Graph& g, const Graph& h, const SubgraphRef& f, const std::vector<int>& phi);

struct ScanResult {
    Rational min_potential;
    std::vector<int> argmin_vertices;
    long long argmin_edges = 0;
    long long subsets_examined = 0;
    bool argmin_is_whole_graph = false;
    bool argmin_is_cycle = false;
};

/// Minimum potential over connected induced subgraphs with at most
/// max_vertices vertices. Induced suffices: beta > 0 makes potential strictly
/// decreasing under edge additions on a fixed vertex set.
ScanResult subgraph_potential_scan(const Graph& g, const PotentialParams& params, int max_vertices);

} // namespace oddhom
