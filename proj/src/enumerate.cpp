#include "oddhom/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "oddhom/criticality.hpp"
#include "oddhom/formats.hpp"
#include "oddhom/potential.hpp"

namespace oddhom {

namespace {

constexpr int kMaxCanonicalVertices = 10;

// Equitable refinement: colors start as degrees and are re-keyed by the
// multiset of neighbor colors until stable. The color ids come from sorting
// the signature values, so they are label-invariant.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<size_t>(v)] = g.degree(v);
    for (;;) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int w : g.neighbors(v)) nb.push_back(color[static_cast<size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            sig[static_cast<size_t>(v)] = {color[static_cast<size_t>(v)], std::move(nb)};
        }
        std::vector<std::pair<int, std::vector<int>>> keys(sig.begin(), sig.end());
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<int> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(keys.begin(), keys.end(), sig[static_cast<size_t>(v)]) - keys.begin());
        if (next == color) return color;
        color = std::move(next);
    }
}

struct CanonicalSearch {
    const Graph& g;
    int n;
    std::vector<int> class_of_position;  // color class owning each position
    std::vector<std::vector<int>> class_members;
    std::vector<int> placed;             // position -> original vertex
    std::vector<char> used;
    std::vector<unsigned> cols;          // adjacency bits of position p vs positions < p
    std::vector<unsigned> best_cols;
    std::vector<int> best_placed;
    bool have_best = false;

    explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    void run() {
        auto color = refine_colors(g);
        int classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
        class_members.assign(static_cast<size_t>(classes), {});
        for (int v = 0; v < n; ++v) class_members[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
        for (int c = 0; c < classes; ++c)
            for (size_t i = 0; i < class_members[static_cast<size_t>(c)].size(); ++i)
                class_of_position.push_back(c);
        placed.assign(static_cast<size_t>(n), -1);
        used.assign(static_cast<size_t>(n), 0);
        cols.assign(static_cast<size_t>(n), 0);
        dfs(0, true);
    }

    unsigned column_bits(int candidate, int p) const {
        unsigned bits = 0;
        for (int q = 0; q < p; ++q)
            bits = (bits << 1) | (g.has_edge(candidate, placed[static_cast<size_t>(q)]) ? 1u : 0u);
        return bits;
    }

    void dfs(int p, bool tight) {
        if (p == n) {
            // a tight leaf equals the current best exactly; replace only on
            // the first completion or on a strictly larger branch
            if (!have_best) {
                best_cols = cols;
                best_placed = placed;
                have_best = true;
            } else if (!tight && cols > best_cols) {
                best_cols = cols;
                best_placed = placed;
            }
            return;
        }
        int cls = class_of_position[static_cast<size_t>(p)];
        std::vector<std::pair<unsigned, int>> cands;
        for (int v : class_members[static_cast<size_t>(cls)]) {
            if (used[static_cast<size_t>(v)]) continue;
            cands.emplace_back(column_bits(v, p), v);
        }
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (auto [bits, v] : cands) {
            bool child_tight = tight;
            if (have_best && tight) {
                if (bits < best_cols[static_cast<size_t>(p)]) break;  // sorted; the rest only get smaller
                if (bits > best_cols[static_cast<size_t>(p)]) child_tight = false;
            }
            placed[static_cast<size_t>(p)] = v;
            used[static_cast<size_t>(v)] = 1;
            cols[static_cast<size_t>(p)] = bits;
            dfs(p + 1, have_best ? child_tight : true);
            used[static_cast<size_t>(v)] = 0;
        }
        placed[static_cast<size_t>(p)] = -1;
    }
};

} // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxCanonicalVertices)
        throw std::invalid_argument("canonical_labeling: supported up to " +
                                    std::to_string(kMaxCanonicalVertices) + " vertices, got " + std::to_string(n));
    if (n == 0) return {};
    CanonicalSearch search(g);
    search.run();
    return search.best_placed;
}

Graph canonical_graph(const Graph& g) {
    auto order = canonical_labeling(g);
    const int n = g.vertex_count();
    std::vector<int> pos(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) pos[static_cast<size_t>(order[static_cast<size_t>(p)])] = p;
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges())
        edges.emplace_back(pos[static_cast<size_t>(e.u)], pos[static_cast<size_t>(e.v)]);
    return Graph::from_edges(n, edges);
}

std::string canonical_form(const Graph& g) {
    return emit_graph6(canonical_graph(g));
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 0 || n > kMaxCanonicalVertices) throw std::invalid_argument("all_graphs_up_to_iso: n out of range");
    std::vector<Graph> all;
    std::vector<Graph> level{Graph(n)};
    std::set<std::string> seen{canonical_form(level.front())};
    while (!level.empty()) {
        for (const Graph& g : level) all.push_back(g);
        std::vector<Graph> next;
        for (const Graph& g : level) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    auto edges = g.edges();
                    std::vector<std::pair<int, int>> es;
                    es.reserve(edges.size() + 1);
                    for (const Edge& e : edges) es.emplace_back(e.u, e.v);
                    es.emplace_back(u, v);
                    Graph h = Graph::from_edges(n, es);
                    std::string form = canonical_form(h);
                    if (seen.insert(form).second) next.push_back(canonical_graph(h));
                }
        }
        level = std::move(next);
    }
    return all;
}

namespace {

void record_critical(EnumerationResult& result, const Graph& g, std::set<std::string>& dedup) {
    std::string key = g.vertex_count() <= kMaxCanonicalVertices ? canonical_form(g) : emit_graph6(g);
    if (!dedup.insert(key).second) return;
    CriticalRecord rec;
    rec.g6 = key;
    rec.n = g.vertex_count();
    rec.e = g.edge_count();
    rec.potential_17_15 = potential(g);
    result.critical_per_n[rec.n]++;
    if (!result.min_potential || rec.potential_17_15 < *result.min_potential)
        result.min_potential = rec.potential_17_15;
    result.critical.push_back(std::move(rec));
}

bool prune_says_not_critical(const Graph& g, int t) {
    // sound filters only: critical graphs are 2-connected, and a graph whose
    // odd girth is below 2t+1 can only be critical if it is that short odd
    // cycle itself (otherwise deleting an off-cycle edge stays hom-free)
    if (!is_two_connected(g)) return true;
    auto og = odd_girth(g);
    if (og && *og < 2 * t + 1) {
        bool is_the_cycle = g.vertex_count() == *og && g.edge_count() == *og;
        if (!is_the_cycle) return true;
    }
    return false;
}

} // namespace

EnumerationResult enumerate_critical(int t, const EnumerationOptions& options) {
    if (t < 1) throw std::invalid_argument("enumerate_critical: t must be positive");
    if (options.n_max > 8)
        throw std::invalid_argument("enumerate_critical: internal generation supports n <= 8; stream larger inputs");
    EnumerationResult result;
    result.t = t;
    result.n_max = options.n_max;
    result.pruned = options.pruning;

    Graph target = Graph::cycle(2 * t + 1);
    std::vector<Graph> candidates;
    for (int n = 1; n <= options.n_max; ++n) {
        for (Graph& g : all_graphs_up_to_iso(n)) {
            if (g.vertex_count() < 3 || g.min_degree() < 2 || !is_connected(g)) continue;
            result.candidates_per_n[n]++;
            candidates.push_back(std::move(g));
        }
    }

    std::vector<char> verdicts(candidates.size(), 0);
    auto probe = [&](size_t i) {
        const Graph& g = candidates[i];
        if (options.pruning && prune_says_not_critical(g, t)) return;
        verdicts[i] = is_critical(g, target).verdict == Verdict::critical;
    };
    int threads = std::max(1, options.threads);
    if (threads == 1) {
        for (size_t i = 0; i < candidates.size(); ++i) probe(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int tix = 0; tix < threads; ++tix)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < candidates.size(); i = next.fetch_add(1)) probe(i);
            });
        for (auto& th : pool) th.join();
    }

    std::set<std::string> dedup;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (verdicts[i]) record_critical(result, candidates[i], dedup);
    std::sort(result.critical.begin(), result.critical.end(),
              [](const CriticalRecord& a, const CriticalRecord& b) {
                  return std::tie(a.n, a.g6) < std::tie(b.n, b.g6);
              });
    return result;
}

EnumerationResult stream_critical(int t, std::istream& in) {
    if (t < 1) throw std::invalid_argument("stream_critical: t must be positive");
    EnumerationResult result;
    result.t = t;
    Graph target = Graph::cycle(2 * t + 1);
    Graph6Reader reader(in);
    std::set<std::string> dedup;
    while (auto item = reader.next()) {
        ++result.lines_read;
        if (!item->graph) {
            result.errors.push_back("line " + std::to_string(item->line_number) + ": " + item->error);
            continue;
        }
        const Graph& g = *item->graph;
        result.candidates_per_n[g.vertex_count()]++;
        if (is_critical(g, target).verdict == Verdict::critical) record_critical(result, g, dedup);
    }
    std::sort(result.critical.begin(), result.critical.end(),
              [](const CriticalRecord& a, const CriticalRecord& b) {
                  return std::tie(a.n, a.g6) < std::tie(b.n, b.g6);
              });
    return result;
}

} // namespace oddhom
