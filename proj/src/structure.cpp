#include "oddhom/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oddhom {

StringDecomposition decompose(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) <= 1)
            throw std::invalid_argument("decompose: vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v)) + " (need min degree 2)");
    StringDecomposition d;
    d.strings_at.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) d.branch_vertices.push_back(v);

    std::vector<char> visited(static_cast<size_t>(n), 0);  // degree-2 vertices consumed by a string
    auto walk_chain = [&](int from, int first) {
        StringInfo s;
        s.endpoint_a = from;
        int prev = from, cur = first;
        while (g.degree(cur) == 2) {
            visited[static_cast<size_t>(cur)] = 1;
            s.internal.push_back(cur);
            const auto& nb = g.neighbors(cur);
            int next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        s.endpoint_b = cur;
        return s;
    };

    for (int a : d.branch_vertices) {
        for (int b : g.neighbors(a)) {
            if (g.degree(b) >= 3) {
                if (a < b) {
                    StringInfo s;
                    s.endpoint_a = a;
                    s.endpoint_b = b;
                    d.strings.push_back(std::move(s));
                }
            } else if (!visited[static_cast<size_t>(b)]) {
                d.strings.push_back(walk_chain(a, b));
            }
        }
    }
    // orient deterministically: smaller endpoint first
    for (auto& s : d.strings) {
        if (s.endpoint_a > s.endpoint_b) {
            std::swap(s.endpoint_a, s.endpoint_b);
            std::reverse(s.internal.begin(), s.internal.end());
        }
    }
    std::sort(d.strings.begin(), d.strings.end(), [](const StringInfo& x, const StringInfo& y) {
        return std::tie(x.endpoint_a, x.endpoint_b, x.internal) < std::tie(y.endpoint_a, y.endpoint_b, y.internal);
    });
    for (size_t i = 0; i < d.strings.size(); ++i) {
        const StringInfo& s = d.strings[i];
        d.strings_at[static_cast<size_t>(s.endpoint_a)].push_back(static_cast<int>(i));
        if (!s.closed()) d.strings_at[static_cast<size_t>(s.endpoint_b)].push_back(static_cast<int>(i));
    }

    // whatever degree-2 vertices remain form cycle components
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2 || visited[static_cast<size_t>(v)]) continue;
        std::vector<int> cyc{v};
        visited[static_cast<size_t>(v)] = 1;
        int prev = v, cur = g.neighbors(v)[0];
        while (cur != v) {
            cyc.push_back(cur);
            visited[static_cast<size_t>(cur)] = 1;
            const auto& nb = g.neighbors(cur);
            int next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        d.pure_cycles.push_back(std::move(cyc));
    }
    return d;
}

VertexProfile vertex_profile(const Graph& g, const StringDecomposition& d, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("vertex_profile: vertex out of range");
    if (g.degree(v) < 3)
        throw std::invalid_argument("vertex_profile: vertex " + std::to_string(v) + " has degree < 3");
    VertexProfile p;
    p.vertex = v;
    p.degree = g.degree(v);
    for (int idx : d.strings_at[static_cast<size_t>(v)]) {
        const StringInfo& s = d.strings[static_cast<size_t>(idx)];
        if (s.closed())
            throw std::invalid_argument("vertex_profile: closed string at vertex " + std::to_string(v) +
                                        " (type undefined)");
        p.type.push_back(s.k());
        p.weight += s.k();
    }
    std::sort(p.type.rbegin(), p.type.rend());
    return p;
}

VertexProfile vertex_profile(const Graph& g, int v) { return vertex_profile(g, decompose(g), v); }

std::vector<std::vector<int>> cycles_of_length(const Graph& g, int length) {
    std::vector<std::vector<int>> out;
    if (length < 3) return out;
    const int n = g.vertex_count();
    std::vector<char> in_path(static_cast<size_t>(n), 0);
    std::vector<int> path;

    // Paths rooted at the cycle's smallest vertex; interior vertices all
    // larger than the root, and the reflection is killed by requiring
    // path[1] < path.back() at closure.
    auto dfs = [&](auto&& self, int cur) -> void {
        if (static_cast<int>(path.size()) == length) {
            if (path[1] < path.back() && g.has_edge(cur, path[0])) out.push_back(path);
            return;
        }
        for (int y : g.neighbors(cur)) {
            if (y <= path[0] || in_path[static_cast<size_t>(y)]) continue;
            in_path[static_cast<size_t>(y)] = 1;
            path.push_back(y);
            self(self, y);
            path.pop_back();
            in_path[static_cast<size_t>(y)] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        in_path[static_cast<size_t>(s)] = 1;
        dfs(dfs, s);
        in_path[static_cast<size_t>(s)] = 0;
    }
    return out;
}

namespace {

std::set<Edge> cycle_edge_set(const std::vector<int>& cyc) {
    std::set<Edge> es;
    for (size_t i = 0; i < cyc.size(); ++i) es.insert(Edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    return es;
}

bool string_inside_cycle(const StringInfo& s, const std::set<Edge>& cyc_edges) {
    int prev = s.endpoint_a;
    for (int x : s.internal) {
        if (!cyc_edges.count(Edge(prev, x))) return false;
        prev = x;
    }
    return cyc_edges.count(Edge(prev, s.endpoint_b)) > 0;
}

} // namespace

std::vector<Cell> find_cells(const Graph& g, const StringDecomposition& d, int t) {
    if (t < 1) throw std::invalid_argument("find_cells: t must be positive");
    std::vector<Cell> cells;
    for (auto& cyc : cycles_of_length(g, 2 * t + 1)) {
        Cell c;
        c.vertices = cyc;
        c.has_string_data = true;
        auto edges = cycle_edge_set(cyc);
        std::vector<char> on_cycle(static_cast<size_t>(g.vertex_count()), 0);
        for (int v : cyc) on_cycle[static_cast<size_t>(v)] = 1;
        for (size_t i = 0; i < d.strings.size(); ++i) {
            const StringInfo& s = d.strings[i];
            bool touches = on_cycle[static_cast<size_t>(s.endpoint_a)] || on_cycle[static_cast<size_t>(s.endpoint_b)];
            if (!touches || string_inside_cycle(s, edges)) continue;
            c.incident_strings.push_back(static_cast<int>(i));
            c.type.push_back(s.k());
            c.weight += s.k();
        }
        c.degree = static_cast<int>(c.incident_strings.size());
        std::sort(c.type.rbegin(), c.type.rend());
        cells.push_back(std::move(c));
    }
    return cells;
}

std::vector<Cell> find_cells(const Graph& g, int t) {
    if (g.vertex_count() > 0 && g.min_degree() < 2) {
        // cycles never pass through degree-<=1 vertices, so they are still
        // enumerable; string data is undefined without a decomposition
        std::vector<Cell> cells;
        for (auto& cyc : cycles_of_length(g, 2 * t + 1)) {
            Cell c;
            c.vertices = cyc;
            cells.push_back(std::move(c));
        }
        return cells;
    }
    return find_cells(g, decompose(g), t);
}

namespace {

std::string vertex_list(const std::vector<int>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "}";
}

AuditEntry make_entry(std::string name, AuditStatus st, std::string detail = "") {
    AuditEntry e;
    e.name = std::move(name);
    e.status = st;
    e.detail = std::move(detail);
    return e;
}

} // namespace

LemmaAudit audit_lemmas(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("audit_lemmas: t must be positive");
    LemmaAudit audit;
    audit.t = t;
    const int cell_len = 2 * t + 1;
    const int long_len = 2 * t + 3;
    const int max_str = cell_len - 2;  // strings with k >= v(H)-2 are forbidden

    // two-connected
    {
        AuditEntry e;
        e.name = "two-connected";
        if (g.vertex_count() < 3) {
            e.status = AuditStatus::fails;
            e.detail = "fewer than 3 vertices";
        } else if (!is_connected(g)) {
            e.status = AuditStatus::fails;
            e.detail = "disconnected";
        } else {
            auto cuts = articulation_points(g);
            if (cuts.empty()) {
                e.status = AuditStatus::holds;
            } else {
                e.status = AuditStatus::fails;
                e.detail = "cut vertex " + std::to_string(cuts.front());
                e.witness_vertices = {cuts.front()};
            }
        }
        audit.entries.push_back(std::move(e));
    }

    // min-girth
    {
        AuditEntry e;
        e.name = "min-girth";
        auto gg = girth(g);
        if (!gg || *gg >= cell_len) {
            e.status = AuditStatus::holds;
            e.detail = gg ? "girth " + std::to_string(*gg) : "acyclic";
        } else {
            e.status = AuditStatus::fails;
            e.detail = "girth " + std::to_string(*gg) + " < " + std::to_string(cell_len);
        }
        audit.entries.push_back(std::move(e));
    }

    const bool decomposable = g.vertex_count() > 0 && g.min_degree() >= 2;
    StringDecomposition d;
    if (decomposable) d = decompose(g);
    const bool has_strings = decomposable && d.has_branch_vertices();
    bool has_closed = false;
    for (const auto& s : d.strings) has_closed |= s.closed();

    auto na = [&](const char* name, const char* why) {
        audit.entries.push_back(make_entry(name, AuditStatus::not_applicable, why));
    };

    // max-string-length
    if (!has_strings) {
        na("max-string-length", decomposable ? "no branch vertices" : "degree-<=1 vertices present");
    } else {
        AuditEntry e;
        e.name = "max-string-length";
        e.status = AuditStatus::holds;
        for (const auto& s : d.strings) {
            if (s.k() >= max_str) {
                e.status = AuditStatus::fails;
                e.detail = std::to_string(s.k()) + "-string between " + std::to_string(s.endpoint_a) + " and " +
                           std::to_string(s.endpoint_b);
                e.witness_vertices = {s.endpoint_a, s.endpoint_b};
                break;
            }
        }
        audit.entries.push_back(std::move(e));
    }

    // string-parity: two vertices never share two strings of equal parity
    if (!has_strings) {
        na("string-parity", decomposable ? "no branch vertices" : "degree-<=1 vertices present");
    } else {
        AuditEntry e;
        e.name = "string-parity";
        e.status = AuditStatus::holds;
        std::map<std::pair<int, int>, std::vector<int>> by_endpoints;
        for (size_t i = 0; i < d.strings.size(); ++i) {
            const auto& s = d.strings[i];
            if (!s.closed()) by_endpoints[{s.endpoint_a, s.endpoint_b}].push_back(static_cast<int>(i));
        }
        for (auto& [pair, idxs] : by_endpoints) {
            for (size_t i = 0; i < idxs.size() && e.status == AuditStatus::holds; ++i)
                for (size_t j = i + 1; j < idxs.size(); ++j) {
                    int k1 = d.strings[static_cast<size_t>(idxs[i])].k();
                    int k2 = d.strings[static_cast<size_t>(idxs[j])].k();
                    if ((k1 & 1) == (k2 & 1)) {
                        e.status = AuditStatus::fails;
                        e.detail = "vertices " + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                                   " share a " + std::to_string(k1) + "-string and a " + std::to_string(k2) +
                                   "-string";
                        e.witness_vertices = {pair.first, pair.second};
                        break;
                    }
                }
        }
        audit.entries.push_back(std::move(e));
    }

    // vertex-weight: wt(v) <= (2t-1)deg(v) - (2t+1)
    if (!has_strings) {
        na("vertex-weight", decomposable ? "no branch vertices" : "degree-<=1 vertices present");
    } else if (has_closed) {
        na("vertex-weight", "closed string present; weights undefined");
    } else {
        AuditEntry e;
        e.name = "vertex-weight";
        e.status = AuditStatus::holds;
        for (int v : d.branch_vertices) {
            auto p = vertex_profile(g, d, v);
            int bound = (2 * t - 1) * p.degree - (2 * t + 1);
            if (p.weight > bound) {
                e.status = AuditStatus::fails;
                e.detail = "vertex " + std::to_string(v) + " has weight " + std::to_string(p.weight) + " > " +
                           std::to_string(bound);
                e.witness_vertices = {v};
                break;
            }
        }
        audit.entries.push_back(std::move(e));
    }

    // cells and long cycles are plain cycles; they exist regardless of strings
    auto cell_cycles = cycles_of_length(g, cell_len);
    auto long_cycles = cycles_of_length(g, long_len);

    std::vector<Cell> cells;
    if (decomposable) cells = find_cells(g, d, t);

    // strings-in-cells: an incident string has at most one endpoint on the cell
    if (!decomposable || !d.has_branch_vertices()) {
        na("strings-in-cells", decomposable ? "no strings" : "degree-<=1 vertices present");
    } else if (cells.empty()) {
        na("strings-in-cells", "no cells");
    } else {
        AuditEntry e;
        e.name = "strings-in-cells";
        e.status = AuditStatus::holds;
        for (const auto& c : cells) {
            std::vector<char> on(static_cast<size_t>(g.vertex_count()), 0);
            for (int v : c.vertices) on[static_cast<size_t>(v)] = 1;
            for (int idx : c.incident_strings) {
                const auto& s = d.strings[static_cast<size_t>(idx)];
                if (on[static_cast<size_t>(s.endpoint_a)] && on[static_cast<size_t>(s.endpoint_b)]) {
                    e.status = AuditStatus::fails;
                    e.detail = "cell " + vertex_list(c.vertices) + " contains both endpoints of a " +
                               std::to_string(s.k()) + "-string";
                    e.witness_vertices = {s.endpoint_a, s.endpoint_b};
                    break;
                }
            }
            if (e.status == AuditStatus::fails) break;
        }
        audit.entries.push_back(std::move(e));
    }

    // cell-weight: wt(C) <= (2t-1)deg(C) - (2t+1)
    if (!decomposable) {
        na("cell-weight", "degree-<=1 vertices present");
    } else if (cells.empty()) {
        na("cell-weight", "no cells");
    } else {
        AuditEntry e;
        e.name = "cell-weight";
        e.status = AuditStatus::holds;
        for (const auto& c : cells) {
            int bound = (2 * t - 1) * c.degree - (2 * t + 1);
            if (c.weight > bound) {
                e.status = AuditStatus::fails;
                e.detail = "cell " + vertex_list(c.vertices) + " has weight " + std::to_string(c.weight) + " > " +
                           std::to_string(bound);
                e.witness_vertices = c.vertices;
                break;
            }
        }
        audit.entries.push_back(std::move(e));
    }

    // cell-min-degree: no cell of degree <= 2 (a minimum-counterexample fact;
    // plain cycles fail it by design)
    if (!decomposable) {
        na("cell-min-degree", "degree-<=1 vertices present");
    } else if (cells.empty()) {
        na("cell-min-degree", "no cells");
    } else {
        AuditEntry e;
        e.name = "cell-min-degree";
        e.status = AuditStatus::holds;
        for (const auto& c : cells) {
            if (c.degree <= 2) {
                e.status = AuditStatus::fails;
                e.detail = "cell " + vertex_list(c.vertices) + " has degree " + std::to_string(c.degree);
                e.witness_vertices = c.vertices;
                break;
            }
        }
        audit.entries.push_back(std::move(e));
    }

    // cell-disjointness: (2t+1)-cycles are pairwise vertex-disjoint
    if (cell_cycles.size() < 2) {
        na("cell-disjointness", "fewer than two cells");
    } else {
        AuditEntry e;
        e.name = "cell-disjointness";
        e.status = AuditStatus::holds;
        for (size_t i = 0; i < cell_cycles.size() && e.status == AuditStatus::holds; ++i)
            for (size_t j = i + 1; j < cell_cycles.size(); ++j) {
                std::vector<int> shared;
                std::set<int> si(cell_cycles[i].begin(), cell_cycles[i].end());
                for (int v : cell_cycles[j])
                    if (si.count(v)) shared.push_back(v);
                if (!shared.empty()) {
                    e.status = AuditStatus::fails;
                    e.detail = "cells " + vertex_list(cell_cycles[i]) + " and " + vertex_list(cell_cycles[j]) +
                               " share " + vertex_list(shared);
                    e.witness_vertices = shared;
                    break;
                }
            }
        audit.entries.push_back(std::move(e));
    }

    // cell-long-cycle-edge-disjoint: (2t+1)- and (2t+3)-cycles share no edge
    if (cell_cycles.empty() || long_cycles.empty()) {
        na("cell-long-cycle-edge-disjoint", "needs both cycle lengths");
    } else {
        AuditEntry e;
        e.name = "cell-long-cycle-edge-disjoint";
        e.status = AuditStatus::holds;
        for (const auto& c : cell_cycles) {
            auto ce = cycle_edge_set(c);
            for (const auto& l : long_cycles) {
                for (auto le : cycle_edge_set(l))
                    if (ce.count(le)) {
                        e.status = AuditStatus::fails;
                        e.detail = "cell " + vertex_list(c) + " and " + std::to_string(long_len) + "-cycle " +
                                   vertex_list(l) + " share edge {" + std::to_string(le.u) + "," +
                                   std::to_string(le.v) + "}";
                        e.witness_edges = {le};
                        break;
                    }
                if (e.status == AuditStatus::fails) break;
            }
            if (e.status == AuditStatus::fails) break;
        }
        audit.entries.push_back(std::move(e));
    }

    // long-cycle-intersection: two (2t+3)-cycles meet in a path of length <= 2
    if (long_cycles.size() < 2) {
        na("long-cycle-intersection", "fewer than two long cycles");
    } else {
        AuditEntry e;
        e.name = "long-cycle-intersection";
        e.status = AuditStatus::holds;
        for (size_t i = 0; i < long_cycles.size() && e.status == AuditStatus::holds; ++i) {
            auto ei = cycle_edge_set(long_cycles[i]);
            std::set<int> vi(long_cycles[i].begin(), long_cycles[i].end());
            for (size_t j = i + 1; j < long_cycles.size(); ++j) {
                std::vector<int> sv;
                for (int v : long_cycles[j])
                    if (vi.count(v)) sv.push_back(v);
                if (sv.empty()) continue;
                std::vector<Edge> se;
                for (auto le : cycle_edge_set(long_cycles[j]))
                    if (ei.count(le)) se.push_back(le);
                // the intersection must be a single path with <= 2 edges
                bool ok = se.size() <= 2 && sv.size() == se.size() + 1;
                if (ok && !se.empty()) {
                    std::map<int, int> deg;
                    for (auto le : se) {
                        deg[le.u]++;
                        deg[le.v]++;
                    }
                    for (auto& [v, dd] : deg) ok = ok && dd <= 2;
                }
                if (!ok) {
                    e.status = AuditStatus::fails;
                    e.detail = std::to_string(long_len) + "-cycles " + vertex_list(long_cycles[i]) + " and " +
                               vertex_list(long_cycles[j]) + " intersect in " + vertex_list(sv) + " with " +
                               std::to_string(se.size()) + " shared edges";
                    e.witness_vertices = sv;
                    e.witness_edges = se;
                    break;
                }
            }
        }
        audit.entries.push_back(std::move(e));
    }

    return audit;
}

} // namespace oddhom
