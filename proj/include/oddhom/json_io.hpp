#pragma once

#include <json.hpp>

#include "oddhom/criticality.hpp"
#include "oddhom/discharge.hpp"
#include "oddhom/enumerate.hpp"
#include "oddhom/hom.hpp"
#include "oddhom/potential.hpp"
#include "oddhom/structure.hpp"
#include "oddhom/transforms.hpp"

namespace oddhom {

/// Stable JSON documents for the CLI. Every document carries a "schema"
/// version field; rationals serialize as exact strings like "-4/3".
inline constexpr int kSchemaVersion = 1;

nlohmann::json json_of(const Rational& r);
nlohmann::json json_of(const Edge& e);
nlohmann::json graph_summary_json(const Graph& g);

nlohmann::json hom_json(const Graph& g, const Graph& h, const HomSearchResult& result);
nlohmann::json criticality_json(const Graph& g, const CriticalityReport& report);
nlohmann::json structure_json(const Graph& g, int t);
nlohmann::json audit_json(const LemmaAudit& audit);
nlohmann::json potential_json(const Graph& g, const PotentialParams& params, int t,
                              const ScanResult* scan = nullptr);
nlohmann::json ledger_json(const ChargeLedger& ledger);
nlohmann::json basic_discharge_json(const BasicDischargeReport& report);
nlohmann::json enumeration_json(const EnumerationResult& result);
nlohmann::json fold_json(const FoldOutcome& outcome);
nlohmann::json ore_json(const OreDensityReport& report, const CriticalityReport* criticality);

} // namespace oddhom
