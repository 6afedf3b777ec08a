#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddhom {

/// Unordered edge, normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;
    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// No loops, no parallel edges; adjacency lists are sorted and symmetric.
/// Values are immutable once built, so they can be shared freely across
/// threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<size_t>(check_count(n))) {}

    /// Builds from an edge list. Out-of-range endpoints and loops are errors;
    /// duplicate edges collapse silently.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph cycle(int n);     // the n-cycle 0-1-...-(n-1)-0; requires n >= 3
    static Graph complete(int n);  // K_n
    static Graph path(int n);      // path on n vertices, n-1 edges

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return m_; }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }
    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }
    bool has_edge(int u, int v) const;

    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

    int min_degree() const;
    int max_degree() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_;
    }

private:
    static int check_count(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }
    void check_vertex(int v) const {
        if (!has_vertex(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

/// Records how vertex ids moved through a structural operation.
/// image[old] is the new id, or -1 when the vertex was removed.
struct VertexMap {
    std::vector<int> image;

    static VertexMap identity(int n) {
        VertexMap m;
        m.image.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) m.image[static_cast<size_t>(i)] = i;
        return m;
    }
    int operator()(int old_id) const {
        if (old_id < 0 || old_id >= static_cast<int>(image.size()))
            throw std::invalid_argument("vertex map: id out of domain");
        return image[static_cast<size_t>(old_id)];
    }
};

struct GraphAndMap {
    Graph graph;
    VertexMap map;
};

/// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Length of the shortest odd cycle; nullopt for bipartite graphs.
std::optional<int> odd_girth(const Graph& g);

/// Merges non-adjacent u and v into one vertex (placed at min(u,v)'s slot),
/// deduplicating the unioned neighborhood. Identifying adjacent vertices would
/// create a loop and is rejected.
GraphAndMap identify(const Graph& g, int u, int v);

/// Replaces every edge by a path with s internal vertices. New vertices are
/// appended after the originals in edge order.
Graph subdivide_all(const Graph& g, int s);

Graph delete_edge(const Graph& g, int u, int v);
GraphAndMap delete_vertex(const Graph& g, int v);
GraphAndMap induced_subgraph(const Graph& g, std::vector<int> vertices);

std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
std::vector<int> articulation_points(const Graph& g);

/// Connected, at least 3 vertices, and no cut vertex.
bool is_two_connected(const Graph& g);

} // namespace oddhom
