#include "oddhom/graph.hpp"

#include <array>
#include <deque>
#include <limits>
#include <numeric>

namespace oddhom {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") with n=" + std::to_string(n));
        if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
        g.adj_[static_cast<size_t>(a)].push_back(b);
        g.adj_[static_cast<size_t>(b)].push_back(a);
    }
    long long m = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m += static_cast<long long>(nb.size());
    }
    g.m_ = m / 2;
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return from_edges(n, es);
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return from_edges(n, es);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return from_edges(n, es);
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::min_degree() const {
    int d = std::numeric_limits<int>::max();
    for (int v = 0; v < vertex_count(); ++v) d = std::min(d, degree(v));
    return vertex_count() == 0 ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < vertex_count(); ++v) d = std::max(d, degree(v));
    return d;
}

namespace {

// Shortest cycle through the BFS root is found exactly when the root lies on
// a shortest cycle, so the minimum over all roots is the girth.
int shortest_cycle_through(const Graph& g, int root) {
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n), -1);
    std::deque<int> q{root};
    dist[static_cast<size_t>(root)] = 0;
    int best = std::numeric_limits<int>::max();
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : g.neighbors(x)) {
            if (dist[static_cast<size_t>(y)] < 0) {
                dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                parent[static_cast<size_t>(y)] = x;
                q.push_back(y);
            } else if (y != parent[static_cast<size_t>(x)]) {
                best = std::min(best, dist[static_cast<size_t>(x)] + dist[static_cast<size_t>(y)] + 1);
            }
        }
    }
    return best;
}

} // namespace

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    for (int v = 0; v < g.vertex_count(); ++v) best = std::min(best, shortest_cycle_through(g, v));
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<int> odd_girth(const Graph& g) {
    // BFS in the bipartite double cover: the shortest odd closed walk through
    // the root is the (root, even) -> (root, odd) distance.
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<std::array<int, 2>> dist(static_cast<size_t>(n));
    for (int root = 0; root < n; ++root) {
        for (auto& d : dist) d = {-1, -1};
        dist[static_cast<size_t>(root)][0] = 0;
        std::deque<std::pair<int, int>> q{{root, 0}};
        while (!q.empty()) {
            auto [x, p] = q.front();
            q.pop_front();
            int dx = dist[static_cast<size_t>(x)][static_cast<size_t>(p)];
            if (dx + 1 >= best) continue;
            for (int y : g.neighbors(x)) {
                int np = 1 - p;
                if (dist[static_cast<size_t>(y)][static_cast<size_t>(np)] < 0) {
                    dist[static_cast<size_t>(y)][static_cast<size_t>(np)] = dx + 1;
                    q.emplace_back(y, np);
                }
            }
        }
        int d = dist[static_cast<size_t>(root)][1];
        if (d > 0) best = std::min(best, d);
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

GraphAndMap identify(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw std::invalid_argument("identify: vertex out of range");
    if (u == v) throw std::invalid_argument("identify: vertices must be distinct");
    if (g.has_edge(u, v)) throw std::invalid_argument("identify: vertices are adjacent");
    if (u > v) std::swap(u, v);
    const int n = g.vertex_count();
    VertexMap map;
    map.image.resize(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) map.image[static_cast<size_t>(x)] = x < v ? x : x - 1;
    map.image[static_cast<size_t>(v)] = u;
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges()) es.emplace_back(map(e.u), map(e.v));
    return {Graph::from_edges(n - 1, es), std::move(map)};
}

Graph subdivide_all(const Graph& g, int s) {
    if (s < 0) throw std::invalid_argument("subdivide_all: negative subdivision count");
    if (s == 0) return g;
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    int next = n;
    for (const Edge& e : g.edges()) {
        int prev = e.u;
        for (int i = 0; i < s; ++i) {
            es.emplace_back(prev, next);
            prev = next++;
        }
        es.emplace_back(prev, e.v);
    }
    return Graph::from_edges(next, es);
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: edge not present");
    Edge target(u, v);
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges())
        if (e != target) es.emplace_back(e.u, e.v);
    return Graph::from_edges(g.vertex_count(), es);
}

GraphAndMap delete_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("delete_vertex: vertex out of range");
    const int n = g.vertex_count();
    VertexMap map;
    map.image.resize(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) map.image[static_cast<size_t>(x)] = x < v ? x : (x == v ? -1 : x - 1);
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges())
        if (e.u != v && e.v != v) es.emplace_back(map(e.u), map(e.v));
    return {Graph::from_edges(n - 1, es), std::move(map)};
}

GraphAndMap induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    VertexMap map;
    map.image.assign(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (!g.has_vertex(vertices[i])) throw std::invalid_argument("induced_subgraph: vertex out of range");
        map.image[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges())
        if (map.image[static_cast<size_t>(e.u)] >= 0 && map.image[static_cast<size_t>(e.v)] >= 0)
            es.emplace_back(map(e.u), map(e.v));
    return {Graph::from_edges(static_cast<int>(vertices.size()), es), std::move(map)};
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp, stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (int y : g.neighbors(x))
                if (!seen[static_cast<size_t>(y)]) {
                    seen[static_cast<size_t>(y)] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<int> articulation_points(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<char> is_cut(static_cast<size_t>(n), 0);
    int timer = 0;

    struct Frame {
        int v, parent;
        size_t next_child = 0;
        int child_count = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] >= 0) continue;
        std::vector<Frame> stack{{root, -1}};
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next_child < nb.size()) {
                int y = nb[f.next_child++];
                if (y == f.parent) continue;
                if (disc[static_cast<size_t>(y)] >= 0) {
                    low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(y)]);
                } else {
                    disc[static_cast<size_t>(y)] = low[static_cast<size_t>(y)] = timer++;
                    ++f.child_count;
                    stack.push_back({y, f.v});
                }
            } else {
                int v = f.v, parent = f.parent, children = f.child_count;
                stack.pop_back();
                if (parent >= 0) {
                    low[static_cast<size_t>(parent)] = std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
                    bool parent_is_root = stack.back().parent < 0;
                    if (!parent_is_root && low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(parent)])
                        is_cut[static_cast<size_t>(parent)] = 1;
                } else if (children >= 2) {
                    is_cut[static_cast<size_t>(v)] = 1;
                }
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

bool is_two_connected(const Graph& g) {
    return g.vertex_count() >= 3 && is_connected(g) && articulation_points(g).empty();
}

} // namespace oddhom
