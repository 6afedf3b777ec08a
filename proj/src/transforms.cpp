#include "oddhom/transforms.hpp"

#include <set>

namespace oddhom {

FoldOutcome fold_face(const Graph& g, const std::vector<int>& face, int k) {
    const int r = static_cast<int>(face.size());
    if (r < 3) throw std::invalid_argument("fold_face: face needs at least 3 vertices");
    if (r == k) throw std::invalid_argument("fold_face: face length equals the target odd girth");
    std::set<int> distinct(face.begin(), face.end());
    if (static_cast<int>(distinct.size()) != r) throw std::invalid_argument("fold_face: face repeats a vertex");
    for (int i = 0; i < r; ++i)
        if (!g.has_edge(face[static_cast<size_t>(i)], face[static_cast<size_t>((i + 1) % r)]))
            throw std::invalid_argument("fold_face: face is not a cycle of the graph");
    auto og = odd_girth(g);
    if (!og || *og != k)
        throw std::invalid_argument("fold_face: graph odd girth is " + (og ? std::to_string(*og) : "infinite") +
                                    ", expected " + std::to_string(k));

    FoldOutcome out;
    for (int i = 0; i < r; ++i) {
        int a = face[static_cast<size_t>((i - 1 + r) % r)];
        int b = face[static_cast<size_t>((i + 1) % r)];
        FoldAttempt attempt;
        attempt.pivot = i;
        if (a == b) {
            attempt.reason = "merge targets coincide";
            out.attempts.push_back(std::move(attempt));
            continue;
        }
        if (g.has_edge(a, b)) {
            attempt.reason = "merge targets adjacent";
            out.attempts.push_back(std::move(attempt));
            continue;
        }
        auto [folded, map] = identify(g, a, b);
        auto og2 = odd_girth(folded);
        attempt.resulting_odd_girth = og2 ? std::optional<int>(*og2) : std::nullopt;
        if (og2 && *og2 == k) {
            out.attempts.push_back(std::move(attempt));
            out.folded = std::move(folded);
            out.pivot = i;
            out.map = std::move(map);
            return out;
        }
        attempt.reason = og2 ? "odd girth dropped to " + std::to_string(*og2) : "graph became bipartite";
        out.attempts.push_back(std::move(attempt));
    }
    return out;  // no valid pivot: signals a non-facial or non-planar input
}

Graph ore_subdivide(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("ore_subdivide: t must be positive");
    return subdivide_all(g, 2 * t - 2);
}

OreDensityReport ore_density_check(const Graph& g_subdivided, int t) {
    if (t < 1) throw std::invalid_argument("ore_density_check: t must be positive");
    OreDensityReport r;
    r.t = t;
    r.vertices = g_subdivided.vertex_count();
    r.edges = g_subdivided.edge_count();
    r.formula_value = (Rational(t) * Rational(2 * t + 3) * Rational(r.vertices) -
                       Rational(t + 1) * Rational(2 * t - 1)) /
                      Rational(2LL * t * t + 2 * t - 1);
    r.equality = Rational(r.edges) == r.formula_value;
    return r;
}

} // namespace oddhom
