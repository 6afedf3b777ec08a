#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "oddhom/graph.hpp"
#include "oddhom/structure.hpp"

namespace oddhom {

struct Homomorphism {
    std::vector<int> map;  // vertex of G -> vertex of H
};

/// Edge preservation check, O(e).
bool verify_homomorphism(const Graph& g, const Graph& h, const Homomorphism& phi);

/// End colors reachable by homomorphisms of a path. Targets are capped at 64
/// vertices so a set of colors fits in one word.
struct ExtensionSet {
    std::uint64_t mask = 0;
    int universe = 0;  // v(H)

    bool contains(int c) const { return c >= 0 && c < universe && (mask >> c) & 1; }
    int size() const { return __builtin_popcountll(mask); }
    std::vector<int> colors() const {
        std::vector<int> out;
        for (int c = 0; c < universe; ++c)
            if ((mask >> c) & 1) out.push_back(c);
        return out;
    }
};

/// Exactly the set of end colors reachable by a homomorphism of a path with
/// `path_edge_count` edges whose first vertex maps to start_color. For a
/// cycle target this is closed-form cyclic-displacement arithmetic; for other
/// connected targets it falls back to stepping neighbor sets.
ExtensionSet extension_set(const Graph& h, int start_color, int path_edge_count);

/// Relation tables for one target, cached by path edge count. rel[x] has bit
/// y set iff a path of that many edges maps its ends to x and y. Tables are
/// symmetric, so one lookup serves both directions. Thread-safe.
class TargetContext {
public:
    explicit TargetContext(Graph h);

    const Graph& target() const { return h_; }
    int colors() const { return h_.vertex_count(); }
    std::uint64_t neighbor_mask(int c) const { return nbr_masks_[static_cast<size_t>(c)]; }
    std::uint64_t full_mask() const { return full_; }
    const std::vector<std::uint64_t>& relation(int edge_count) const;

    /// Color order of the target when it is a single cycle (empty otherwise).
    const std::vector<int>& cycle_order() const { return cycle_order_; }

private:
    Graph h_;
    std::vector<std::uint64_t> nbr_masks_;
    std::uint64_t full_ = 0;
    std::vector<int> cycle_order_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::vector<std::uint64_t>> cache_;
};

enum class SolveStatus { found, none, budget_exhausted };

struct HomSearchResult {
    SolveStatus status = SolveStatus::none;
    std::optional<Homomorphism> witness;
    std::uint64_t nodes = 0;  // assignment nodes expanded

    bool found() const { return status == SolveStatus::found; }
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000ULL;

/// Direct backtracking search over V(G) with forward checking; independent of
/// the string-contraction route, which makes the two usable as mutual
/// cross-checks. "none" is only reported on a completed search.
HomSearchResult find_hom(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultBudget);

/// CSP over the branch vertices of G. A string between branch vertices
/// contributes one table constraint; parallel strings intersect. Closed
/// strings become unary constraints, and cycle components are kept aside for
/// an arithmetic feasibility check.
struct ContractedInstance {
    std::vector<int> variables;  // branch vertex ids in G
    struct TableConstraint {
        int a = 0, b = 0;  // variable indices, a < b
        std::vector<std::uint64_t> rel;
    };
    std::vector<TableConstraint> constraints;
    std::vector<std::uint64_t> domains;  // initial unary domains
    StringDecomposition strings;
    int source_vertices = 0;
    int target_vertices = 0;
};

ContractedInstance contract_strings(const Graph& g, const Graph& h);
ContractedInstance contract_strings(const Graph& g, const TargetContext& target);

struct ContractedSolution {
    SolveStatus status = SolveStatus::none;
    std::vector<int> colors;  // per variable, when found
    std::uint64_t nodes = 0;
};

/// Complete backtracking with arc-consistency propagation over the relation
/// tables; smallest-domain-first with constraint-degree tie break. The budget
/// is optional and only used by callers that need a cutoff.
ContractedSolution solve_contracted(const ContractedInstance& inst, const TargetContext& target,
                                    std::optional<std::uint64_t> budget = std::nullopt);

/// Extends a branch solution to all string interiors and cycle components by
/// walking the target; throws std::logic_error on inconsistency.
Homomorphism lift(const ContractedInstance& inst, const std::vector<int>& branch_colors, const Graph& g,
                  const TargetContext& target);

/// Production pipeline: strip degree-<=1 vertices, contract strings, solve,
/// lift, and re-extend over the stripped vertices. Complete unless a budget
/// is supplied.
HomSearchResult solve_hom(const Graph& g, const TargetContext& target,
                          std::optional<std::uint64_t> budget = std::nullopt);
HomSearchResult solve_hom(const Graph& g, const Graph& h, std::optional<std::uint64_t> budget = std::nullopt);

} // namespace oddhom
