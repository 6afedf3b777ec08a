// oddhom: an exact laboratory for graph homomorphisms into odd cycles.
//
// Exit codes: 0 = affirmative result, 1 = negative mathematical result,
// 2 = budget exhausted or operational failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oddhom/criticality.hpp"
#include "oddhom/discharge.hpp"
#include "oddhom/enumerate.hpp"
#include "oddhom/formats.hpp"
#include "oddhom/json_io.hpp"
#include "oddhom/potential.hpp"
#include "oddhom/transforms.hpp"
#include "oddhom/verification.hpp"

namespace {

using namespace oddhom;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitOperational = 2;

struct CommonArgs {
    int t = 3;
    std::uint64_t budget = kDefaultBudget;
    int threads = 1;
    bool strict = false;
    std::string out;
};

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphDocument load_graph(const std::string& path, bool strict) {
    DimacsOptions opts;
    opts.strict = strict;
    if (path == "-" || path.empty()) {
        std::string text = read_all(std::cin);
        auto doc = parse_any(text, "", opts);
        if (doc.source.empty()) doc.source = "stdin";
        return doc;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    auto doc = parse_any(read_all(in), path, opts);
    if (doc.source.empty()) doc.source = "file:" + path;
    return doc;
}

void write_output(const nlohmann::json& j, const CommonArgs& args) {
    std::string text = j.dump(2) + "\n";
    if (args.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + args.out + " for writing");
        out << text;
    }
}

Graph target_cycle(const std::string& spec, int t) {
    if (spec.empty()) return Graph::cycle(2 * t + 1);
    std::string s = spec;
    if (s[0] == 'c' || s[0] == 'C') s = s.substr(1);
    int n = std::stoi(s);
    if (n < 3 || n % 2 == 0) throw std::runtime_error("target must be an odd cycle c3, c5, c7, ...");
    return Graph::cycle(n);
}

std::vector<int> parse_vertex_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homomorphism laboratory for odd-cycle targets"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    CommonArgs common;
    app.set_config("--config", "", "read options from a TOML/INI config file");
    app.add_option("--t", common.t, "odd-cycle parameter t (target C_{2t+1})")->check(CLI::Range(1, 5));
    app.add_option("--budget", common.budget, "solver node budget")->check(CLI::PositiveNumber);
    app.add_option("--threads", common.threads, "worker threads for independent subproblems")
        ->check(CLI::PositiveNumber);
    app.add_flag("--strict", common.strict, "strict parsing (duplicate edges and count mismatches are errors)");
    app.add_option("--out", common.out, "write the JSON report to a file instead of stdout");

    std::string in_path, target_spec, face_csv, base_path;
    int scan_limit = 0, enum_n = 8;
    long long alpha = 17, beta = 15;
    int fold_k = 0;
    bool no_pruning = false;

    auto* hom = app.add_subcommand("hom", "find a homomorphism into an odd cycle");
    hom->add_option("graph", in_path, "input graph (graph6/DIMACS/JSON; - for stdin)")->required();
    hom->add_option("--target", target_spec, "target cycle, e.g. c7 (default C_{2t+1})");

    auto* critical = app.add_subcommand("critical", "criticality report");
    critical->add_option("graph", in_path)->required();
    critical->add_option("--target", target_spec);

    auto* extract = app.add_subcommand("extract-critical", "greedy critical subgraph (graph6 output)");
    extract->add_option("graph", in_path)->required();
    extract->add_option("--target", target_spec);

    auto* structure = app.add_subcommand("structure", "strings, profiles and cells");
    structure->add_option("graph", in_path)->required();

    auto* audit = app.add_subcommand("audit", "structural fact audit");
    audit->add_option("graph", in_path)->required();

    auto* pot = app.add_subcommand("potential", "potential and density report");
    pot->add_option("graph", in_path)->required();
    pot->add_option("--alpha", alpha, "potential alpha (default 17)");
    pot->add_option("--beta", beta, "potential beta (default 15)");
    pot->add_option("--scan", scan_limit, "scan connected induced subgraphs up to this many vertices");

    auto* fold = app.add_subcommand("fold", "one folding step on a facial cycle");
    fold->add_option("graph", in_path)->required();
    fold->add_option("--face", face_csv, "facial cycle as comma-separated vertices")->required();
    fold->add_option("--k", fold_k, "odd girth to preserve")->required();

    auto* ore = app.add_subcommand("ore", "subdivide every edge (2t-2) times and check the density formula");
    ore->add_option("base-graph", base_path)->required();

    bool basic_rule = false;
    auto* discharge = app.add_subcommand("discharge", "run the five-rule charge ledger");
    discharge->add_option("graph", in_path)->required();
    discharge->add_flag("--basic", basic_rule, "run the one-rule density discharge instead");

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive critical-graph search (n <= 8)");
    enumerate->add_option("--n", enum_n, "maximum vertex count")->check(CLI::Range(1, 8));
    enumerate->add_flag("--no-pruning", no_pruning, "test every candidate without sound pre-filters");

    auto* filter = app.add_subcommand("filter-critical", "filter a graph6 stream (stdin) for critical graphs");

    auto* verify = app.add_subcommand("verify-paper", "run the built-in verification suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (hom->parsed()) {
            auto doc = load_graph(in_path, common.strict);
            Graph target = target_cycle(target_spec, common.t);
            auto result = solve_hom(doc.graph, target, common.budget);
            write_output(hom_json(doc.graph, target, result), common);
            if (result.status == SolveStatus::budget_exhausted) return kExitOperational;
            return result.found() ? kExitYes : kExitNo;
        }
        if (critical->parsed()) {
            auto doc = load_graph(in_path, common.strict);
            Graph target = target_cycle(target_spec, common.t);
            CriticalityOptions opts;
            opts.threads = common.threads;
            auto report = is_critical(doc.graph, target, opts);
            write_output(criticality_json(doc.graph, report), common);
            return report.verdict == Verdict::critical ? kExitYes : kExitNo;
        }
        if (extract->parsed()) {
            auto doc = load_graph(in_path, common.strict);
            Graph target = target_cycle(target_spec, common.t);
            Graph sub = extract_critical_subgraph(doc.graph, target);
            std::string line = emit_graph6(sub) + "\n";
            if (common.out.empty()) {
                std::cout << line;
            } else {
                std::ofstream out(common.out, std::ios::binary);
                out << line;
            }
            return kExitYes;
        }
        if (structure->parsed()) {
            auto doc = load_graph(in_path, common.strict);
            write_output(structure_json(doc.graph, common.t), common);
            return kExitYes;
        }
        if (audit->parsed()) {
            auto doc = load_graph(in_path, common.strict);
            auto report = audit_lemmas(doc.graph, common.t);
            write_output(audit_json(report), common);
            return report.all_hold_or_na() ? kExitYes : kExitNo;
        }
        if (pot->parsed()) {
            auto doc = load_graph(in_path, common.strict);
            PotentialParams params;
            params.alpha = Rational(alpha);
            params.beta = Rational(beta);
            if (scan_limit > 0) {
                auto scan = subgraph_potential_scan(doc.graph, params, scan_limit);
                write_output(potential_json(doc.graph, params, common.t, &scan), common);
            } else {
                write_output(potential_json(doc.graph, params, common.t, nullptr), common);
            }
            return kExitYes;
        }
        if (fold->parsed()) {
            auto doc = load_graph(in_path, common.strict);
            auto outcome = fold_face(doc.graph, parse_vertex_list(face_csv), fold_k);
            write_output(fold_json(outcome), common);
            return outcome.ok() ? kExitYes : kExitNo;
        }
        if (ore->parsed()) {
            auto doc = load_graph(base_path, common.strict);
            Graph g = ore_subdivide(doc.graph, common.t);
            auto density = ore_density_check(g, common.t);
            CriticalityOptions opts;
            opts.threads = common.threads;
            auto report = is_critical(g, Graph::cycle(2 * common.t + 1), opts);
            auto j = ore_json(density, &report);
            j["graph6"] = emit_graph6(g);
            write_output(j, common);
            return report.verdict == Verdict::critical && density.equality ? kExitYes : kExitNo;
        }
        if (discharge->parsed()) {
            auto doc = load_graph(in_path, common.strict);
            if (basic_rule) {
                write_output(basic_discharge_json(basic_density_discharge(doc.graph, common.t)), common);
            } else {
                write_output(ledger_json(run_discharging(doc.graph, common.t)), common);
            }
            return kExitYes;
        }
        if (enumerate->parsed()) {
            EnumerationOptions opts;
            opts.n_max = enum_n;
            opts.pruning = !no_pruning;
            opts.threads = common.threads;
            auto result = enumerate_critical(common.t, opts);
            write_output(enumeration_json(result), common);
            return kExitYes;
        }
        if (filter->parsed()) {
            auto result = stream_critical(common.t, std::cin);
            write_output(enumeration_json(result), common);
            return result.errors.empty() ? kExitYes : kExitOperational;
        }
        if (verify->parsed()) {
            VerifyOptions opts;
            opts.threads = common.threads;
            auto results = run_verification(opts);
            bool all = true;
            for (const auto& r : results) {
                all = all && r.pass;
                std::printf("[%s] %-20s %7.2fs  %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.seconds,
                            r.description.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str());
            }
            std::printf("%s\n", all ? "all checks passed" : "SOME CHECKS FAILED");
            return all ? kExitYes : kExitNo;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitOperational;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperational;
    }
    return kExitOperational;
}
