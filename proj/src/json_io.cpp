#include "oddhom/json_io.hpp"

#include "oddhom/formats.hpp"

namespace oddhom {

using nlohmann::json;

json json_of(const Rational& r) { return r.str(); }

json json_of(const Edge& e) { return json::array({e.u, e.v}); }

json graph_summary_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["e"] = g.edge_count();
    return j;
}

namespace {

json doc(const char* kind) {
    json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::critical: return "critical";
        case Verdict::not_hom_free: return "not-hom-free";
        case Verdict::not_minimal: return "not-minimal";
    }
    return "?";
}

const char* status_name(AuditStatus s) {
    switch (s) {
        case AuditStatus::holds: return "holds";
        case AuditStatus::fails: return "fails";
        case AuditStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

json structure_ref_json(const StructureRef& ref) {
    json j;
    j["kind"] = ref.kind == StructureRef::Kind::vertex ? "vertex" : "cell";
    j["index"] = ref.index;
    return j;
}

} // namespace

json hom_json(const Graph& g, const Graph& h, const HomSearchResult& result) {
    json j = doc("hom");
    j["graph"] = graph_summary_json(g);
    j["target"] = graph_summary_json(h);
    j["nodes"] = result.nodes;
    switch (result.status) {
        case SolveStatus::found:
            j["result"] = "hom";
            j["witness"] = result.witness->map;
            break;
        case SolveStatus::none:
            j["result"] = "none";
            break;
        case SolveStatus::budget_exhausted:
            j["result"] = "budget-exhausted";
            break;
    }
    return j;
}

json criticality_json(const Graph& g, const CriticalityReport& report) {
    json j = doc("criticality");
    j["graph"] = graph_summary_json(g);
    j["verdict"] = verdict_name(report.verdict);
    j["hom_free"] = report.is_hom_free;
    j["potential_17_15"] = json_of(potential(g));
    if (report.failing_edge) j["failing_edge"] = json_of(*report.failing_edge);
    if (report.hom) j["hom"] = report.hom->map;
    if (!report.isolated_vertices.empty()) j["isolated_vertices"] = report.isolated_vertices;
    return j;
}

json structure_json(const Graph& g, int t) {
    json j = doc("structure");
    j["graph"] = graph_summary_json(g);
    j["t"] = t;
    StringDecomposition d = decompose(g);
    j["branch_vertices"] = d.branch_vertices;
    auto strings = json::array();
    for (const auto& s : d.strings) {
        json sj;
        sj["endpoints"] = {s.endpoint_a, s.endpoint_b};
        sj["k"] = s.k();
        sj["internal"] = s.internal;
        sj["closed"] = s.closed();
        strings.push_back(std::move(sj));
    }
    j["strings"] = std::move(strings);
    j["pure_cycles"] = d.pure_cycles;
    auto profiles = json::array();
    for (int v : d.branch_vertices) {
        bool closed_here = false;
        for (int idx : d.strings_at[static_cast<size_t>(v)])
            closed_here |= d.strings[static_cast<size_t>(idx)].closed();
        if (closed_here) continue;  // type undefined
        VertexProfile p = vertex_profile(g, d, v);
        json pj;
        pj["vertex"] = p.vertex;
        pj["degree"] = p.degree;
        pj["type"] = p.type;
        pj["weight"] = p.weight;
        profiles.push_back(std::move(pj));
    }
    j["profiles"] = std::move(profiles);
    auto cells = json::array();
    for (const auto& c : find_cells(g, d, t)) {
        json cj;
        cj["vertices"] = c.vertices;
        cj["degree"] = c.degree;
        cj["type"] = c.type;
        cj["weight"] = c.weight;
        cells.push_back(std::move(cj));
    }
    j["cells"] = std::move(cells);
    return j;
}

json audit_json(const LemmaAudit& audit) {
    json j = doc("audit");
    j["t"] = audit.t;
    auto entries = json::array();
    for (const auto& e : audit.entries) {
        json ej;
        ej["name"] = e.name;
        ej["status"] = status_name(e.status);
        if (!e.detail.empty()) ej["detail"] = e.detail;
        if (!e.witness_vertices.empty()) ej["witness_vertices"] = e.witness_vertices;
        if (!e.witness_edges.empty()) {
            auto edges = json::array();
            for (const auto& we : e.witness_edges) edges.push_back(json_of(we));
            ej["witness_edges"] = std::move(edges);
        }
        entries.push_back(std::move(ej));
    }
    j["checks"] = std::move(entries);
    j["all_hold_or_na"] = audit.all_hold_or_na();
    return j;
}

json potential_json(const Graph& g, const PotentialParams& params, int t, const ScanResult* scan) {
    json j = doc("potential");
    j["graph"] = graph_summary_json(g);
    j["alpha"] = json_of(params.alpha);
    j["beta"] = json_of(params.beta);
    j["potential"] = json_of(potential(g, params));
    DensityReport dr = density_predicates(g, t);
    json djson;
    djson["t"] = dr.t;
    if (dr.main_applicable) {
        djson["main_bound_holds"] = dr.main_holds;
        djson["main_bound_equality"] = dr.main_equality;
    }
    if (dr.basic_applicable) {
        djson["basic_bound_holds"] = dr.basic_holds;
        djson["basic_bound_rhs"] = json_of(dr.basic_rhs);
    }
    djson["ore_equality"] = dr.ore_equality;
    djson["ore_rhs"] = json_of(dr.ore_rhs);
    j["density"] = std::move(djson);
    if (scan) {
        json sj;
        sj["min_potential"] = json_of(scan->min_potential);
        sj["argmin_vertices"] = scan->argmin_vertices;
        sj["argmin_edges"] = scan->argmin_edges;
        sj["subsets_examined"] = scan->subsets_examined;
        sj["argmin_is_whole_graph"] = scan->argmin_is_whole_graph;
        sj["argmin_is_cycle"] = scan->argmin_is_cycle;
        j["scan"] = std::move(sj);
    }
    return j;
}

json ledger_json(const ChargeLedger& ledger) {
    json j = doc("discharge");
    j["t"] = ledger.t;
    auto cells = json::array();
    for (const auto& c : ledger.cells) cells.push_back(c.vertices);
    j["cells"] = std::move(cells);
    auto stages = json::array();
    for (int s = 0; s < 6; ++s) {
        json sj;
        auto vc = json::array();
        for (const auto& row : ledger.vertex_charge) vc.push_back(json_of(row[static_cast<size_t>(s)]));
        auto cc = json::array();
        for (const auto& row : ledger.cell_charge) cc.push_back(json_of(row[static_cast<size_t>(s)]));
        sj["vertices"] = std::move(vc);
        sj["cells"] = std::move(cc);
        sj["total"] = json_of(ledger.stage_totals[static_cast<size_t>(s)]);
        stages.push_back(std::move(sj));
    }
    j["stages"] = std::move(stages);
    auto transfers = json::array();
    for (const auto& tr : ledger.transfers) {
        json tj;
        tj["stage"] = tr.stage;
        tj["from"] = structure_ref_json(tr.from);
        tj["to"] = structure_ref_json(tr.to);
        tj["amount"] = json_of(tr.amount);
        transfers.push_back(std::move(tj));
    }
    j["transfers"] = std::move(transfers);
    j["flags"] = {{"cells_pairwise_disjoint", ledger.cells_pairwise_disjoint},
                  {"multi_sender_split", ledger.multi_sender_split}};
    auto negatives = json::array();
    for (const auto& ref : ledger.negative_final) negatives.push_back(structure_ref_json(ref));
    j["negative_final"] = std::move(negatives);
    return j;
}

json basic_discharge_json(const BasicDischargeReport& report) {
    json j = doc("basic-discharge");
    j["t"] = report.t;
    auto init = json::array(), fin = json::array();
    for (const auto& r : report.initial) init.push_back(json_of(r));
    for (const auto& r : report.final_charge) fin.push_back(json_of(r));
    j["initial"] = std::move(init);
    j["final"] = std::move(fin);
    j["total"] = json_of(report.total);
    j["deg3_all_at_least_2"] = report.deg3_all_at_least_2;
    j["deg2_all_zero"] = report.deg2_all_zero;
    return j;
}

json enumeration_json(const EnumerationResult& result) {
    json j = doc("enumeration");
    j["t"] = result.t;
    if (result.n_max > 0) j["n_max"] = result.n_max;
    j["pruned"] = result.pruned;
    auto crit = json::array();
    for (const auto& rec : result.critical) {
        json cj;
        cj["g6"] = rec.g6;
        cj["n"] = rec.n;
        cj["e"] = rec.e;
        cj["potential_17_15"] = json_of(rec.potential_17_15);
        crit.push_back(std::move(cj));
    }
    j["critical"] = std::move(crit);
    json per_n = json::object(), crit_n = json::object();
    for (const auto& [n, c] : result.candidates_per_n) per_n[std::to_string(n)] = c;
    for (const auto& [n, c] : result.critical_per_n) crit_n[std::to_string(n)] = c;
    j["candidates_per_n"] = std::move(per_n);
    j["critical_per_n"] = std::move(crit_n);
    if (result.min_potential) j["min_potential"] = json_of(*result.min_potential);
    if (!result.errors.empty()) j["errors"] = result.errors;
    if (result.lines_read > 0) j["lines_read"] = result.lines_read;
    return j;
}

json fold_json(const FoldOutcome& outcome) {
    json j = doc("fold");
    j["ok"] = outcome.ok();
    if (outcome.ok()) {
        j["pivot"] = outcome.pivot;
        j["graph6"] = emit_graph6(*outcome.folded);
    }
    auto attempts = json::array();
    for (const auto& a : outcome.attempts) {
        json aj;
        aj["pivot"] = a.pivot;
        if (!a.reason.empty()) aj["reason"] = a.reason;
        if (a.resulting_odd_girth) aj["odd_girth"] = *a.resulting_odd_girth;
        attempts.push_back(std::move(aj));
    }
    j["attempts"] = std::move(attempts);
    return j;
}

json ore_json(const OreDensityReport& report, const CriticalityReport* criticality) {
    json j = doc("ore");
    j["t"] = report.t;
    j["n"] = report.vertices;
    j["e"] = report.edges;
    j["formula_value"] = json_of(report.formula_value);
    j["density_equality"] = report.equality;
    if (criticality) j["verdict"] = verdict_name(criticality->verdict);
    return j;
}

} // namespace oddhom
