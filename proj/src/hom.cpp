#include "oddhom/hom.hpp"

#include <algorithm>
#include <cassert>

namespace oddhom {

bool verify_homomorphism(const Graph& g, const Graph& h, const Homomorphism& phi) {
    if (static_cast<int>(phi.map.size()) != g.vertex_count()) return false;
    for (int c : phi.map)
        if (!h.has_vertex(c)) return false;
    for (const Edge& e : g.edges())
        if (!h.has_edge(phi.map[static_cast<size_t>(e.u)], phi.map[static_cast<size_t>(e.v)])) return false;
    return true;
}

TargetContext::TargetContext(Graph h) : h_(std::move(h)) {
    const int n = h_.vertex_count();
    if (n > 64) throw std::invalid_argument("target has more than 64 vertices");
    nbr_masks_.resize(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        for (int w : h_.neighbors(v)) nbr_masks_[static_cast<size_t>(v)] |= 1ULL << w;
        full_ |= 1ULL << v;
    }
    // detect a single-cycle target and record its color order
    if (n >= 3 && h_.edge_count() == n && is_connected(h_) && h_.min_degree() == 2 && h_.max_degree() == 2) {
        cycle_order_.reserve(static_cast<size_t>(n));
        int prev = -1, cur = 0;
        for (int i = 0; i < n; ++i) {
            cycle_order_.push_back(cur);
            const auto& nb = h_.neighbors(cur);
            int next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
    }
}

const std::vector<std::uint64_t>& TargetContext::relation(int edge_count) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(edge_count);
    if (it != cache_.end()) return it->second;
    const int n = colors();
    std::vector<std::uint64_t> rel(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) rel[static_cast<size_t>(c)] = 1ULL << c;
    for (int step = 0; step < edge_count; ++step) {
        std::vector<std::uint64_t> next(static_cast<size_t>(n), 0);
        for (int c = 0; c < n; ++c) {
            std::uint64_t m = rel[static_cast<size_t>(c)];
            while (m) {
                int x = __builtin_ctzll(m);
                m &= m - 1;
                next[static_cast<size_t>(c)] |= nbr_masks_[static_cast<size_t>(x)];
            }
        }
        rel = std::move(next);
    }
    return cache_.emplace(edge_count, std::move(rel)).first->second;
}

ExtensionSet extension_set(const Graph& h, int start_color, int path_edge_count) {
    if (h.vertex_count() == 0) throw std::invalid_argument("extension_set: empty target");
    if (h.vertex_count() > 64) throw std::invalid_argument("extension_set: target has more than 64 vertices");
    if (!h.has_vertex(start_color)) throw std::invalid_argument("extension_set: start color out of range");
    if (path_edge_count < 0) throw std::invalid_argument("extension_set: negative path length");
    if (!is_connected(h)) throw std::invalid_argument("extension_set: target must be connected");

    TargetContext ctx(h);
    ExtensionSet out;
    out.universe = h.vertex_count();
    const auto& order = ctx.cycle_order();
    if (!order.empty()) {
        // position of each color along the cycle, then displacement arithmetic:
        // reachable iff the displacement has the parity of L and magnitude <= L
        const int n = h.vertex_count();
        std::vector<int> pos(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
        int p0 = pos[static_cast<size_t>(start_color)];
        for (int d = -path_edge_count; d <= path_edge_count; d += 2) {
            int p = ((p0 + d) % n + n) % n;
            out.mask |= 1ULL << order[static_cast<size_t>(p)];
        }
        return out;
    }
    out.mask = ctx.relation(path_edge_count)[static_cast<size_t>(start_color)];
    return out;
}

HomSearchResult find_hom(const Graph& g, const Graph& h, std::uint64_t budget) {
    HomSearchResult result;
    const int n = g.vertex_count();
    if (h.vertex_count() == 0) {
        result.status = n == 0 ? SolveStatus::found : SolveStatus::none;
        if (result.status == SolveStatus::found) result.witness = Homomorphism{};
        return result;
    }
    if (h.vertex_count() > 64) throw std::invalid_argument("find_hom: target has more than 64 vertices");
    TargetContext ctx{h};

    std::vector<std::uint64_t> dom(static_cast<size_t>(n), ctx.full_mask());
    std::vector<int> assignment(static_cast<size_t>(n), -1);
    std::uint64_t nodes = 0;
    bool exhausted = false;

    auto dfs = [&](auto&& self) -> bool {
        int best = -1, best_size = 65;
        for (int v = 0; v < n; ++v) {
            if (assignment[static_cast<size_t>(v)] >= 0) continue;
            int sz = __builtin_popcountll(dom[static_cast<size_t>(v)]);
            if (sz < best_size || (sz == best_size && best >= 0 && g.degree(v) > g.degree(best))) {
                best = v;
                best_size = sz;
            }
        }
        if (best < 0) return true;  // all assigned
        std::uint64_t options = dom[static_cast<size_t>(best)];
        while (options) {
            int c = __builtin_ctzll(options);
            options &= options - 1;
            if (++nodes > budget) {
                exhausted = true;
                return false;
            }
            assignment[static_cast<size_t>(best)] = c;
            std::vector<std::pair<int, std::uint64_t>> saved;
            bool dead = false;
            for (int w : g.neighbors(best)) {
                if (assignment[static_cast<size_t>(w)] >= 0) {
                    if (!((ctx.neighbor_mask(c) >> assignment[static_cast<size_t>(w)]) & 1)) {
                        dead = true;
                        break;
                    }
                    continue;
                }
                std::uint64_t nd = dom[static_cast<size_t>(w)] & ctx.neighbor_mask(c);
                if (nd != dom[static_cast<size_t>(w)]) {
                    saved.emplace_back(w, dom[static_cast<size_t>(w)]);
                    dom[static_cast<size_t>(w)] = nd;
                }
                if (nd == 0) {
                    dead = true;
                    break;
                }
            }
            if (!dead && self(self)) return true;
            for (auto& [w, m] : saved) dom[static_cast<size_t>(w)] = m;
            assignment[static_cast<size_t>(best)] = -1;
            if (exhausted) return false;
        }
        return false;
    };

    bool ok = dfs(dfs);
    result.nodes = nodes;
    if (ok) {
        result.status = SolveStatus::found;
        result.witness = Homomorphism{assignment};
        assert(verify_homomorphism(g, h, *result.witness));
    } else {
        result.status = exhausted ? SolveStatus::budget_exhausted : SolveStatus::none;
    }
    return result;
}

ContractedInstance contract_strings(const Graph& g, const TargetContext& target) {
    ContractedInstance inst;
    inst.source_vertices = g.vertex_count();
    inst.target_vertices = target.colors();
    inst.strings = decompose(g);  // rejects degree-<=1 vertices
    inst.variables = inst.strings.branch_vertices;
    inst.domains.assign(inst.variables.size(), target.full_mask());

    std::vector<int> var_index(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < inst.variables.size(); ++i)
        var_index[static_cast<size_t>(inst.variables[i])] = static_cast<int>(i);

    std::map<std::pair<int, int>, std::vector<std::uint64_t>> merged;
    for (const StringInfo& s : inst.strings.strings) {
        const auto& rel = target.relation(s.edge_length());
        if (s.closed()) {
            // a closed chain constrains its anchor to colors with a closed
            // walk of the right length
            int a = var_index[static_cast<size_t>(s.endpoint_a)];
            std::uint64_t allowed = 0;
            for (int c = 0; c < target.colors(); ++c)
                if ((rel[static_cast<size_t>(c)] >> c) & 1) allowed |= 1ULL << c;
            inst.domains[static_cast<size_t>(a)] &= allowed;
            continue;
        }
        int a = var_index[static_cast<size_t>(s.endpoint_a)];
        int b = var_index[static_cast<size_t>(s.endpoint_b)];
        auto key = std::minmax(a, b);
        auto [it, fresh] = merged.emplace(std::pair{key.first, key.second}, rel);
        if (!fresh)
            for (size_t c = 0; c < it->second.size(); ++c) it->second[c] &= rel[c];
    }
    for (auto& [key, rel] : merged) {
        ContractedInstance::TableConstraint tc;
        tc.a = key.first;
        tc.b = key.second;
        tc.rel = std::move(rel);
        inst.constraints.push_back(std::move(tc));
    }
    return inst;
}

ContractedInstance contract_strings(const Graph& g, const Graph& h) {
    TargetContext ctx{h};
    return contract_strings(g, ctx);
}

namespace {

// reachable-color sets after 0..steps steps, starting from a single color
std::vector<std::uint64_t> reach_profile(const TargetContext& target, int start, int steps) {
    std::vector<std::uint64_t> r(static_cast<size_t>(steps) + 1);
    r[0] = 1ULL << start;
    for (int i = 1; i <= steps; ++i) {
        std::uint64_t m = r[static_cast<size_t>(i - 1)], acc = 0;
        while (m) {
            int x = __builtin_ctzll(m);
            m &= m - 1;
            acc |= target.neighbor_mask(x);
        }
        r[static_cast<size_t>(i)] = acc;
    }
    return r;
}

// colors along a walk of `steps` edges from color x to color y, smallest
// color preferred at each interior step
std::vector<int> reconstruct_walk(const TargetContext& target, int x, int y, int steps) {
    auto reach = reach_profile(target, x, steps);
    if (!((reach[static_cast<size_t>(steps)] >> y) & 1))
        throw std::logic_error("lift: no walk of required length (contraction bug)");
    std::vector<int> colors(static_cast<size_t>(steps) + 1);
    colors[static_cast<size_t>(steps)] = y;
    for (int i = steps - 1; i >= 0; --i) {
        std::uint64_t cand = reach[static_cast<size_t>(i)] & target.neighbor_mask(colors[static_cast<size_t>(i + 1)]);
        if (!cand) throw std::logic_error("lift: dead end while rebuilding walk (contraction bug)");
        colors[static_cast<size_t>(i)] = __builtin_ctzll(cand);
    }
    return colors;
}

bool cycle_feasible(const TargetContext& target, int length, int* anchor_color) {
    const auto& rel = target.relation(length);
    for (int c = 0; c < target.colors(); ++c) {
        if ((rel[static_cast<size_t>(c)] >> c) & 1) {
            if (anchor_color) *anchor_color = c;
            return true;
        }
    }
    return false;
}

struct AcState {
    std::vector<std::uint64_t> dom;
};

// arc consistency over the table constraints; false on a wiped-out domain
bool propagate(const ContractedInstance& inst, AcState& st) {
    // adjacency of constraints per variable
    std::vector<char> queued(inst.constraints.size(), 1);
    std::vector<size_t> queue;
    for (size_t i = 0; i < inst.constraints.size(); ++i) queue.push_back(i);
    std::vector<std::vector<size_t>> cons_at(st.dom.size());
    for (size_t i = 0; i < inst.constraints.size(); ++i) {
        cons_at[static_cast<size_t>(inst.constraints[i].a)].push_back(i);
        cons_at[static_cast<size_t>(inst.constraints[i].b)].push_back(i);
    }
    while (!queue.empty()) {
        size_t ci = queue.back();
        queue.pop_back();
        queued[ci] = 0;
        const auto& c = inst.constraints[ci];
        auto revise = [&](int u, int w) -> bool {
            std::uint64_t nd = 0, m = st.dom[static_cast<size_t>(u)];
            while (m) {
                int x = __builtin_ctzll(m);
                m &= m - 1;
                if (c.rel[static_cast<size_t>(x)] & st.dom[static_cast<size_t>(w)]) nd |= 1ULL << x;
            }
            if (nd == st.dom[static_cast<size_t>(u)]) return true;
            st.dom[static_cast<size_t>(u)] = nd;
            if (nd == 0) return false;
            for (size_t other : cons_at[static_cast<size_t>(u)])
                if (!queued[other]) {
                    queued[other] = 1;
                    queue.push_back(other);
                }
            return true;
        };
        if (!revise(c.a, c.b)) return false;
        if (!revise(c.b, c.a)) return false;
    }
    return true;
}

} // namespace

ContractedSolution solve_contracted(const ContractedInstance& inst, const TargetContext& target,
                                    std::optional<std::uint64_t> budget) {
    ContractedSolution sol;
    // cycle components constrain feasibility but carry no variables
    for (const auto& cyc : inst.strings.pure_cycles) {
        if (!cycle_feasible(target, static_cast<int>(cyc.size()), nullptr)) {
            sol.status = SolveStatus::none;
            return sol;
        }
    }
    const size_t nv = inst.variables.size();
    if (nv == 0) {
        sol.status = SolveStatus::found;
        return sol;
    }
    std::vector<int> cons_degree(nv, 0);
    for (const auto& c : inst.constraints) {
        cons_degree[static_cast<size_t>(c.a)]++;
        cons_degree[static_cast<size_t>(c.b)]++;
    }

    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<int> out(nv, -1);

    auto dfs = [&](auto&& self, AcState st) -> bool {
        if (!propagate(inst, st)) return false;
        int pick = -1, pick_size = 65;
        for (size_t v = 0; v < nv; ++v) {
            int sz = __builtin_popcountll(st.dom[v]);
            if (sz == 0) return false;
            if (sz == 1) continue;
            if (sz < pick_size ||
                (sz == pick_size && cons_degree[v] > cons_degree[static_cast<size_t>(pick)])) {
                pick = static_cast<int>(v);
                pick_size = sz;
            }
        }
        if (pick < 0) {  // all singleton
            for (size_t v = 0; v < nv; ++v) out[v] = __builtin_ctzll(st.dom[v]);
            return true;
        }
        std::uint64_t options = st.dom[static_cast<size_t>(pick)];
        while (options) {
            int c = __builtin_ctzll(options);
            options &= options - 1;
            ++nodes;
            if (budget && nodes > *budget) {
                exhausted = true;
                return false;
            }
            AcState child = st;
            child.dom[static_cast<size_t>(pick)] = 1ULL << c;
            if (self(self, std::move(child))) return true;
            if (exhausted) return false;
        }
        return false;
    };

    AcState root{inst.domains};
    bool ok = dfs(dfs, std::move(root));
    sol.nodes = nodes;
    if (ok) {
        sol.status = SolveStatus::found;
        sol.colors = std::move(out);
    } else {
        sol.status = exhausted ? SolveStatus::budget_exhausted : SolveStatus::none;
    }
    return sol;
}

Homomorphism lift(const ContractedInstance& inst, const std::vector<int>& branch_colors, const Graph& g,
                  const TargetContext& target) {
    if (branch_colors.size() != inst.variables.size())
        throw std::invalid_argument("lift: branch solution size mismatch");
    Homomorphism phi;
    phi.map.assign(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < inst.variables.size(); ++i)
        phi.map[static_cast<size_t>(inst.variables[i])] = branch_colors[i];

    for (const StringInfo& s : inst.strings.strings) {
        if (s.k() == 0) continue;
        int ca = phi.map[static_cast<size_t>(s.endpoint_a)];
        int cb = phi.map[static_cast<size_t>(s.endpoint_b)];
        auto walk = reconstruct_walk(target, ca, cb, s.edge_length());
        for (int i = 0; i < s.k(); ++i)
            phi.map[static_cast<size_t>(s.internal[static_cast<size_t>(i)])] = walk[static_cast<size_t>(i + 1)];
    }
    for (const auto& cyc : inst.strings.pure_cycles) {
        int anchor = -1;
        if (!cycle_feasible(target, static_cast<int>(cyc.size()), &anchor))
            throw std::logic_error("lift: infeasible cycle component (contraction bug)");
        auto walk = reconstruct_walk(target, anchor, anchor, static_cast<int>(cyc.size()));
        for (size_t i = 0; i < cyc.size(); ++i) phi.map[static_cast<size_t>(cyc[i])] = walk[i];
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (phi.map[static_cast<size_t>(v)] < 0) throw std::logic_error("lift: unassigned vertex (contraction bug)");
    if (!verify_homomorphism(g, target.target(), phi))
        throw std::logic_error("lift: produced map is not a homomorphism (contraction bug)");
    return phi;
}

namespace {

struct StripRecord {
    int vertex;
    int attach;  // surviving neighbor at removal time, -1 if none
};

} // namespace

HomSearchResult solve_hom(const Graph& g, const TargetContext& target, std::optional<std::uint64_t> budget) {
    HomSearchResult result;
    const int n = g.vertex_count();
    if (target.colors() == 0) {
        result.status = n == 0 ? SolveStatus::found : SolveStatus::none;
        if (result.status == SolveStatus::found) result.witness = Homomorphism{};
        return result;
    }

    // iteratively strip degree-<=1 vertices; they never constrain feasibility
    // against a target with at least one edge
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<char> removed(static_cast<size_t>(n), 0);
    std::vector<StripRecord> strip_order;
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = g.degree(v);
        if (deg[static_cast<size_t>(v)] <= 1) stack.push_back(v);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (removed[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] > 1) continue;
        removed[static_cast<size_t>(v)] = 1;
        int attach = -1;
        for (int w : g.neighbors(v)) {
            if (removed[static_cast<size_t>(w)]) continue;
            attach = w;
            if (--deg[static_cast<size_t>(w)] <= 1) stack.push_back(w);
        }
        strip_order.push_back({v, attach});
    }

    std::vector<int> live;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<size_t>(v)]) live.push_back(v);

    Homomorphism phi;
    phi.map.assign(static_cast<size_t>(n), -1);

    if (!live.empty()) {
        auto [core, map] = induced_subgraph(g, live);
        ContractedInstance inst = contract_strings(core, target);
        ContractedSolution sol = solve_contracted(inst, target, budget);
        result.nodes = sol.nodes;
        if (sol.status != SolveStatus::found) {
            result.status = sol.status;
            return result;
        }
        Homomorphism core_phi = lift(inst, sol.colors, core, target);
        for (int v : live) phi.map[static_cast<size_t>(v)] = core_phi.map[static_cast<size_t>(map(v))];
    }

    // re-extend over the stripped vertices in reverse removal order
    for (auto it = strip_order.rbegin(); it != strip_order.rend(); ++it) {
        if (it->attach < 0) {
            phi.map[static_cast<size_t>(it->vertex)] = 0;
            continue;
        }
        std::uint64_t nb = target.neighbor_mask(phi.map[static_cast<size_t>(it->attach)]);
        if (!nb) {  // target vertex with no neighbors cannot absorb a pendant edge
            result.status = SolveStatus::none;
            return result;
        }
        phi.map[static_cast<size_t>(it->vertex)] = __builtin_ctzll(nb);
    }

    if (!verify_homomorphism(g, target.target(), phi))
        throw std::logic_error("solve_hom: produced map fails verification");
    result.status = SolveStatus::found;
    result.witness = std::move(phi);
    return result;
}

HomSearchResult solve_hom(const Graph& g, const Graph& h, std::optional<std::uint64_t> budget) {
    TargetContext ctx{h};
    return solve_hom(g, ctx, budget);
}

} // namespace oddhom
