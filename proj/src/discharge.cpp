#include "oddhom/discharge.hpp"

#include <algorithm>
#include <map>

namespace oddhom {

namespace {

StringDecomposition checked_decomposition(const Graph& g) {
    StringDecomposition d = decompose(g);  // rejects degree <= 1
    for (const auto& s : d.strings)
        if (s.closed())
            throw std::invalid_argument("discharging: closed string at vertex " + std::to_string(s.endpoint_a) +
                                        " (vertex weights undefined)");
    if (!d.pure_cycles.empty())
        throw std::invalid_argument("discharging: cycle component without a branch vertex (vertex weights undefined)");
    if (d.branch_vertices.empty())
        throw std::invalid_argument("discharging: no vertex of degree >= 3 (vertex weights undefined)");
    return d;
}

} // namespace

InitialCharges initial_charges(const Graph& g) {
    StringDecomposition d = checked_decomposition(g);
    InitialCharges out;
    out.vertex_charge.assign(static_cast<size_t>(g.vertex_count()), Rational(0));
    for (int v : d.branch_vertices) {
        VertexProfile p = vertex_profile(g, d, v);
        out.vertex_charge[static_cast<size_t>(v)] = Rational(15LL * p.degree - 2LL * p.weight - 34);
    }
    out.total = Rational(0);
    for (const auto& c : out.vertex_charge) out.total += c;
    return out;
}

ChargeLedger run_discharging(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("run_discharging: t must be positive");
    StringDecomposition d = checked_decomposition(g);
    const int n = g.vertex_count();

    ChargeLedger ledger;
    ledger.t = t;
    ledger.cells = find_cells(g, d, t);
    ledger.vertex_charge.assign(static_cast<size_t>(n), {});
    ledger.cell_charge.assign(ledger.cells.size(), {});

    InitialCharges init = initial_charges(g);
    for (int v = 0; v < n; ++v) ledger.vertex_charge[static_cast<size_t>(v)][0] = init.vertex_charge[static_cast<size_t>(v)];

    // cell membership per vertex
    std::vector<std::vector<int>> cells_of(static_cast<size_t>(n));
    for (size_t c = 0; c < ledger.cells.size(); ++c)
        for (int v : ledger.cells[c].vertices) cells_of[static_cast<size_t>(v)].push_back(static_cast<int>(c));
    for (size_t c = 0; c < ledger.cells.size() && ledger.cells_pairwise_disjoint; ++c)
        for (size_t c2 = c + 1; c2 < ledger.cells.size() && ledger.cells_pairwise_disjoint; ++c2)
            for (int v : ledger.cells[c2].vertices)
                if (std::find(ledger.cells[c].vertices.begin(), ledger.cells[c].vertices.end(), v) !=
                    ledger.cells[c].vertices.end()) {
                    ledger.cells_pairwise_disjoint = false;
                    break;
                }

    // short-string partners: pairs of distinct branch vertices joined by a
    // k-string with k <= 2
    std::vector<std::vector<int>> short_partners(static_cast<size_t>(n));
    for (const auto& s : d.strings)
        if (is_short_string(s)) {
            short_partners[static_cast<size_t>(s.endpoint_a)].push_back(s.endpoint_b);
            short_partners[static_cast<size_t>(s.endpoint_b)].push_back(s.endpoint_a);
        }
    for (auto& ps : short_partners) {
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    }

    std::map<int, int> weight_of, degree_of;
    for (int v : d.branch_vertices) {
        VertexProfile p = vertex_profile(g, d, v);
        weight_of[v] = p.weight;
        degree_of[v] = p.degree;
    }

    auto carry_forward = [&](int stage) {
        for (int v = 0; v < n; ++v)
            ledger.vertex_charge[static_cast<size_t>(v)][static_cast<size_t>(stage)] =
                ledger.vertex_charge[static_cast<size_t>(v)][static_cast<size_t>(stage - 1)];
        for (size_t c = 0; c < ledger.cells.size(); ++c)
            ledger.cell_charge[c][static_cast<size_t>(stage)] = ledger.cell_charge[c][static_cast<size_t>(stage - 1)];
    };
    auto transfer = [&](int stage, StructureRef from, StructureRef to, const Rational& amount) {
        if (amount.is_zero()) return;
        auto& src = from.kind == StructureRef::Kind::vertex
                        ? ledger.vertex_charge[static_cast<size_t>(from.index)][static_cast<size_t>(stage)]
                        : ledger.cell_charge[static_cast<size_t>(from.index)][static_cast<size_t>(stage)];
        auto& dst = to.kind == StructureRef::Kind::vertex
                        ? ledger.vertex_charge[static_cast<size_t>(to.index)][static_cast<size_t>(stage)]
                        : ledger.cell_charge[static_cast<size_t>(to.index)][static_cast<size_t>(stage)];
        src -= amount;
        dst += amount;
        ledger.transfers.push_back({stage, from, to, amount});
    };
    auto vref = [](int v) { return StructureRef{StructureRef::Kind::vertex, v}; };
    auto cref = [](int c) { return StructureRef{StructureRef::Kind::cell, c}; };
    auto poor_after = [&](int stage, int v) {
        return ledger.vertex_charge[static_cast<size_t>(v)][static_cast<size_t>(stage)].is_negative();
    };

    // R1: every vertex lying in cells hands its whole charge over, split
    // evenly when the cells overlap
    carry_forward(1);
    for (int v = 0; v < n; ++v) {
        const auto& owners = cells_of[static_cast<size_t>(v)];
        if (owners.empty()) continue;
        Rational share = ledger.vertex_charge[static_cast<size_t>(v)][0] / Rational(static_cast<long long>(owners.size()));
        for (int c : owners) transfer(1, vref(v), cref(c), share);
    }

    // R2: cells refill poor vertices one short string away
    carry_forward(2);
    for (int v : d.branch_vertices) {
        if (!poor_after(1, v)) continue;
        std::vector<int> senders;
        for (int u : short_partners[static_cast<size_t>(v)])
            for (int c : cells_of[static_cast<size_t>(u)]) senders.push_back(c);
        std::sort(senders.begin(), senders.end());
        senders.erase(std::unique(senders.begin(), senders.end()), senders.end());
        if (senders.empty()) continue;
        if (senders.size() > 1) ledger.multi_sender_split = true;
        Rational deficit = -ledger.vertex_charge[static_cast<size_t>(v)][1];
        Rational share = deficit / Rational(static_cast<long long>(senders.size()));
        for (int c : senders) transfer(2, cref(c), vref(v), share);
    }

    // R3: vertices of degree >= 4 refill poor short-string partners
    carry_forward(3);
    for (int v : d.branch_vertices) {
        if (!poor_after(2, v)) continue;
        std::vector<int> senders;
        for (int u : short_partners[static_cast<size_t>(v)])
            if (degree_of[u] >= 4) senders.push_back(u);
        if (senders.empty()) continue;
        if (senders.size() > 1) ledger.multi_sender_split = true;
        Rational deficit = -ledger.vertex_charge[static_cast<size_t>(v)][2];
        Rational share = deficit / Rational(static_cast<long long>(senders.size()));
        for (int u : senders) transfer(3, vref(u), vref(v), share);
    }

    // R4: degree-3 vertices of weight <= 4 refill poor partners
    carry_forward(4);
    for (int v : d.branch_vertices) {
        if (!poor_after(3, v)) continue;
        std::vector<int> senders;
        for (int u : short_partners[static_cast<size_t>(v)])
            if (degree_of[u] == 3 && weight_of[u] <= 4) senders.push_back(u);
        if (senders.empty()) continue;
        if (senders.size() > 1) ledger.multi_sender_split = true;
        Rational deficit = -ledger.vertex_charge[static_cast<size_t>(v)][3];
        Rational share = deficit / Rational(static_cast<long long>(senders.size()));
        for (int u : senders) transfer(4, vref(u), vref(v), share);
    }

    // R5: degree-3 weight-5 vertices refill their unique poor partner
    carry_forward(5);
    for (int v : d.branch_vertices) {
        if (!poor_after(4, v)) continue;
        std::vector<int> senders;
        for (int u : short_partners[static_cast<size_t>(v)]) {
            if (degree_of[u] != 3 || weight_of[u] != 5) continue;
            int poor_partners = 0;
            for (int w : short_partners[static_cast<size_t>(u)])
                if (poor_after(4, w)) ++poor_partners;
            if (poor_partners == 1) senders.push_back(u);
        }
        if (senders.empty()) continue;
        if (senders.size() > 1) ledger.multi_sender_split = true;
        Rational deficit = -ledger.vertex_charge[static_cast<size_t>(v)][4];
        Rational share = deficit / Rational(static_cast<long long>(senders.size()));
        for (int u : senders) transfer(5, vref(u), vref(v), share);
    }

    for (int stage = 0; stage < 6; ++stage) {
        Rational total(0);
        for (int v = 0; v < n; ++v) total += ledger.vertex_charge[static_cast<size_t>(v)][static_cast<size_t>(stage)];
        for (size_t c = 0; c < ledger.cells.size(); ++c) total += ledger.cell_charge[c][static_cast<size_t>(stage)];
        ledger.stage_totals[static_cast<size_t>(stage)] = total;
    }
    for (int v = 0; v < n; ++v)
        if (ledger.vertex_charge[static_cast<size_t>(v)][5].is_negative()) ledger.negative_final.push_back(vref(v));
    for (size_t c = 0; c < ledger.cells.size(); ++c)
        if (ledger.cell_charge[c][5].is_negative()) ledger.negative_final.push_back(cref(static_cast<int>(c)));
    return ledger;
}

BasicDischargeReport basic_density_discharge(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("basic_density_discharge: t must be positive");
    StringDecomposition d = checked_decomposition(g);
    BasicDischargeReport r;
    r.t = t;
    const int n = g.vertex_count();
    r.initial.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        r.initial[static_cast<size_t>(v)] = Rational(4LL * t * g.degree(v) - 8LL * t - 2);
    r.final_charge = r.initial;
    // each degree-2 vertex sends -1 to both endpoints of its string
    for (const auto& s : d.strings) {
        for (int i = 0; i < s.k(); ++i) {
            int v = s.internal[static_cast<size_t>(i)];
            r.final_charge[static_cast<size_t>(v)] += Rational(2);
            r.final_charge[static_cast<size_t>(s.endpoint_a)] -= Rational(1);
            r.final_charge[static_cast<size_t>(s.endpoint_b)] -= Rational(1);
        }
    }
    r.total = Rational(0);
    for (const auto& c : r.final_charge) r.total += c;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) >= 3 && r.final_charge[static_cast<size_t>(v)] < Rational(2)) r.deg3_all_at_least_2 = false;
        if (g.degree(v) == 2 && !r.final_charge[static_cast<size_t>(v)].is_zero()) r.deg2_all_zero = false;
    }
    return r;
}

} // namespace oddhom
