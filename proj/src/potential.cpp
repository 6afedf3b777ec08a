#include "oddhom/potential.hpp"

#include <algorithm>
#include <set>

namespace oddhom {

Rational potential_of_counts(long long vertices, long long edges, const PotentialParams& params) {
    if (!(params.alpha > Rational(0)) || !(params.beta > Rational(0)))
        throw std::invalid_argument("potential: alpha and beta must be positive");
    return params.alpha * Rational(vertices) - params.beta * Rational(edges);
}

Rational potential(const Graph& g, const PotentialParams& params) {
    return potential_of_counts(g.vertex_count(), g.edge_count(), params);
}

SubgraphRef whole_graph(const Graph& g) {
    SubgraphRef f;
    f.vertices.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) f.vertices[static_cast<size_t>(v)] = v;
    f.edges = g.edges();
    return f;
}

void validate_subgraph(const Graph& g, const SubgraphRef& f) {
    std::set<int> vs;
    for (int v : f.vertices) {
        if (!g.has_vertex(v)) throw std::invalid_argument("subgraph: vertex out of range");
        if (!vs.insert(v).second) throw std::invalid_argument("subgraph: duplicate vertex");
    }
    std::set<Edge> es;
    for (const Edge& e : f.edges) {
        if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("subgraph: edge not in host graph");
        if (!vs.count(e.u) || !vs.count(e.v))
            throw std::invalid_argument("subgraph: edge endpoint not among subgraph vertices");
        if (!es.insert(e).second) throw std::invalid_argument("subgraph: duplicate edge");
    }
}

Rational potential(const SubgraphRef& f, const PotentialParams& params) {
    return potential_of_counts(f.v(), f.e(), params);
}

DensityReport density_predicates(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("density_predicates: t must be positive");
    DensityReport r;
    r.t = t;
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    const Rational v(r.vertices), e(r.edges);

    if (t == 3) {
        r.main_applicable = true;
        Rational rhs = (Rational(17) * v - Rational(2)) / Rational(15);
        r.main_holds = e >= rhs;
        r.main_equality = e == rhs;
    }

    r.basic_applicable = g.max_degree() >= 3;
    r.basic_rhs = (Rational(1) + Rational(1, 4LL * t)) * v + Rational(1, 3LL * t);
    if (r.basic_applicable) r.basic_holds = e >= r.basic_rhs;

    r.ore_rhs = (Rational(t) * Rational(2 * t + 3) * v - Rational(t + 1) * Rational(2 * t - 1)) /
                Rational(2LL * t * t + 2 * t - 1);
    r.ore_equality = e == r.ore_rhs;
    return r;
}

GFphi build_G_F_phi(const Graph& g, const SubgraphRef& f, const Graph& h, const std::vector<int>& phi) {
    validate_subgraph(g, f);
    if (static_cast<int>(phi.size()) != g.vertex_count())
        throw std::invalid_argument("build_G_F_phi: phi must cover V(G) with -1 outside F");
    std::vector<char> in_f(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : f.vertices) in_f[static_cast<size_t>(v)] = 1;
    if (f.vertices.size() == static_cast<size_t>(g.vertex_count()) &&
        f.edges.size() == static_cast<size_t>(g.edge_count()))
        throw std::invalid_argument("build_G_F_phi: F must be a proper subgraph");
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool defined = phi[static_cast<size_t>(v)] >= 0;
        if (defined != static_cast<bool>(in_f[static_cast<size_t>(v)]))
            throw std::invalid_argument("build_G_F_phi: phi domain must be exactly V(F)");
        if (defined && !h.has_vertex(phi[static_cast<size_t>(v)]))
            throw std::invalid_argument("build_G_F_phi: phi value out of range");
    }
    for (const Edge& e : f.edges)
        if (!h.has_edge(phi[static_cast<size_t>(e.u)], phi[static_cast<size_t>(e.v)]))
            throw std::invalid_argument("build_G_F_phi: phi does not preserve an edge of F");

    GFphi out;
    out.map.image.assign(static_cast<size_t>(g.vertex_count()), -1);
    out.color_vertex.assign(static_cast<size_t>(h.vertex_count()), -1);

    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_f[static_cast<size_t>(v)]) out.map.image[static_cast<size_t>(v)] = next++;
    out.kept_count = next;
    for (int v : f.vertices) {
        int c = phi[static_cast<size_t>(v)];
        if (out.color_vertex[static_cast<size_t>(c)] < 0) out.color_vertex[static_cast<size_t>(c)] = next++;
        out.map.image[static_cast<size_t>(v)] = out.color_vertex[static_cast<size_t>(c)];
    }
    out.origin.assign(static_cast<size_t>(next), -1);
    out.image_color.assign(static_cast<size_t>(next), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_f[static_cast<size_t>(v)]) out.origin[static_cast<size_t>(out.map(v))] = v;
    for (int c = 0; c < h.vertex_count(); ++c)
        if (out.color_vertex[static_cast<size_t>(c)] >= 0)
            out.image_color[static_cast<size_t>(out.color_vertex[static_cast<size_t>(c)])] = c;

    std::vector<std::pair<int, int>> edges;
    // edges of G - F
    for (const Edge& e : g.edges())
        if (!in_f[static_cast<size_t>(e.u)] && !in_f[static_cast<size_t>(e.v)])
            edges.emplace_back(out.map(e.u), out.map(e.v));
    // edges of the image phi(F)
    for (const Edge& e : f.edges)
        edges.emplace_back(out.color_vertex[static_cast<size_t>(phi[static_cast<size_t>(e.u)])],
                           out.color_vertex[static_cast<size_t>(phi[static_cast<size_t>(e.v)])]);
    // re-routed cross edges
    for (const Edge& e : g.edges()) {
        int inside = -1, outside = -1;
        if (in_f[static_cast<size_t>(e.u)] && !in_f[static_cast<size_t>(e.v)]) inside = e.u, outside = e.v;
        if (!in_f[static_cast<size_t>(e.u)] && in_f[static_cast<size_t>(e.v)]) inside = e.v, outside = e.u;
        if (inside < 0) continue;
        edges.emplace_back(out.map(outside), out.color_vertex[static_cast<size_t>(phi[static_cast<size_t>(inside)])]);
    }
    out.graph = Graph::from_edges(next, edges);
    return out;
}

ExtensionWitness find_extension(const Graph& g, const Graph& h, const SubgraphRef& f, const std::vector<int>& phi) {
    ExtensionWitness w;
    w.f = f;
    w.phi = phi;
    w.construction = build_G_F_phi(g, f, h, phi);

    const Graph& gf = w.construction.graph;
    if (solve_hom(gf, h).found())
        throw std::invalid_argument("find_extension: G_F[phi] admits a homomorphism (G is not H-critical?)");

    CriticalSubgraph ext = extract_critical_subgraph_ref(gf, h);
    w.extender.vertices = ext.vertices;
    w.extender.edges = ext.edges;

    std::vector<char> in_w(static_cast<size_t>(gf.vertex_count()), 0);
    for (int v : ext.vertices) in_w[static_cast<size_t>(v)] = 1;

    auto is_image = [&](int nv) { return w.construction.image_color[static_cast<size_t>(nv)] >= 0; };

    // source: W restricted to the image, reported in H coordinates
    for (int v : ext.vertices)
        if (is_image(v)) w.source.vertices.push_back(w.construction.image_color[static_cast<size_t>(v)]);
    std::sort(w.source.vertices.begin(), w.source.vertices.end());
    for (const Edge& e : ext.edges)
        if (is_image(e.u) && is_image(e.v))
            w.source.edges.emplace_back(w.construction.image_color[static_cast<size_t>(e.u)],
                                        w.construction.image_color[static_cast<size_t>(e.v)]);
    std::sort(w.source.edges.begin(), w.source.edges.end());

    // extension F' = F + (W minus the image), with one representative edge in
    // G per re-routed W-edge
    std::set<int> fp_vertices(f.vertices.begin(), f.vertices.end());
    std::set<Edge> fp_edges(f.edges.begin(), f.edges.end());
    for (int v : ext.vertices)
        if (!is_image(v)) fp_vertices.insert(w.construction.origin[static_cast<size_t>(v)]);
    for (const Edge& e : ext.edges) {
        bool iu = is_image(e.u), iv = is_image(e.v);
        if (!iu && !iv) {
            fp_edges.insert(Edge(w.construction.origin[static_cast<size_t>(e.u)],
                                 w.construction.origin[static_cast<size_t>(e.v)]));
        } else if (iu != iv) {
            int img = iu ? e.u : e.v;
            int keep = iu ? e.v : e.u;
            int color = w.construction.image_color[static_cast<size_t>(img)];
            int gv = w.construction.origin[static_cast<size_t>(keep)];
            int rep = -1;
            for (int fv : f.vertices)
                if (phi[static_cast<size_t>(fv)] == color && g.has_edge(gv, fv)) {
                    rep = fv;
                    break;  // f.vertices ascending: smallest preimage
                }
            if (rep < 0) throw std::logic_error("find_extension: cross edge without a preimage");
            fp_edges.insert(Edge(gv, rep));
        }
        // image-image edges belong to the source, not to F'
    }
    w.extension.vertices.assign(fp_vertices.begin(), fp_vertices.end());
    w.extension.edges.assign(fp_edges.begin(), fp_edges.end());
    validate_subgraph(g, w.extension);
    return w;
}

ScanResult subgraph_potential_scan(const Graph& g, const PotentialParams& params, int max_vertices) {
    constexpr long long kSubsetBudget = 20'000'000;
    constexpr int kMaxScanVertices = 16;
    if (max_vertices < 1) throw std::invalid_argument("scan: max_vertices must be positive");
    if (max_vertices > kMaxScanVertices)
        throw std::invalid_argument("scan: limit exceeds the configured budget of " +
                                    std::to_string(kMaxScanVertices) + " vertices");
    const int n = g.vertex_count();

    ScanResult best;
    bool have = false;
    long long examined = 0;

    std::vector<char> in_set(static_cast<size_t>(n), 0), banned(static_cast<size_t>(n), 0);
    std::vector<int> members;
    long long edge_count = 0;

    auto consider = [&]() {
        ++examined;
        if (examined > kSubsetBudget) throw std::runtime_error("scan: subset budget exceeded");
        Rational p = potential_of_counts(static_cast<long long>(members.size()), edge_count, params);
        if (!have || p < best.min_potential) {
            have = true;
            best.min_potential = p;
            best.argmin_vertices = members;
            best.argmin_edges = edge_count;
        }
    };

    // connected induced subsets containing `root` with all members >= root;
    // candidates are consumed left to right, with used-and-excluded marking to
    // produce each set exactly once
    auto expand = [&](auto&& self, std::vector<int> frontier) -> void {
        consider();
        if (static_cast<int>(members.size()) == max_vertices) return;
        for (size_t i = 0; i < frontier.size(); ++i) {
            int u = frontier[i];
            long long added = 0;
            for (int x : g.neighbors(u)) added += in_set[static_cast<size_t>(x)] ? 1 : 0;
            in_set[static_cast<size_t>(u)] = 1;
            members.push_back(u);
            edge_count += added;
            std::vector<int> next(frontier.begin() + static_cast<long>(i) + 1, frontier.end());
            for (int x : g.neighbors(u))
                if (!in_set[static_cast<size_t>(x)] && !banned[static_cast<size_t>(x)] && x > members[0]) {
                    bool already = false;
                    for (size_t j = i + 1; j < frontier.size() && !already; ++j) already = frontier[j] == x;
                    if (!already) next.push_back(x);
                }
            self(self, std::move(next));
            edge_count -= added;
            members.pop_back();
            in_set[static_cast<size_t>(u)] = 0;
            banned[static_cast<size_t>(u)] = 1;  // sets without u handled in later iterations
        }
        for (size_t i = 0; i < frontier.size(); ++i) banned[static_cast<size_t>(frontier[i])] = 0;
    };

    for (int root = 0; root < n; ++root) {
        members.assign(1, root);
        in_set[static_cast<size_t>(root)] = 1;
        edge_count = 0;
        std::vector<int> frontier;
        for (int x : g.neighbors(root))
            if (x > root) frontier.push_back(x);
        expand(expand, std::move(frontier));
        in_set[static_cast<size_t>(root)] = 0;
    }

    best.subsets_examined = examined;
    if (have) {
        std::sort(best.argmin_vertices.begin(), best.argmin_vertices.end());
        best.argmin_is_whole_graph = static_cast<int>(best.argmin_vertices.size()) == n;
        long long k = static_cast<long long>(best.argmin_vertices.size());
        best.argmin_is_cycle = k >= 3 && best.argmin_edges == k;
        if (best.argmin_is_cycle) {
            auto sub = induced_subgraph(g, best.argmin_vertices).graph;
            best.argmin_is_cycle = sub.min_degree() == 2 && sub.max_degree() == 2 && is_connected(sub);
        }
    }
    return best;
}

} // namespace oddhom
