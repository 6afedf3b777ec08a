#pragma once

#include <array>
#include <vector>

#include "oddhom/graph.hpp"
#include "oddhom/rational.hpp"
#include "oddhom/structure.hpp"

namespace oddhom {

struct StructureRef {
    enum class Kind { vertex, cell };
    Kind kind = Kind::vertex;
    int index = -1;

    friend bool operator==(const StructureRef&, const StructureRef&) = default;
};

/// Audited execution of the five sequential discharging rules. Stage i
/// charges are computed from the stage i-1 snapshot with all of the stage's
/// transfers applied simultaneously, so conservation is exact by
/// construction. When the rules' implicit preconditions fail on a concrete
/// input (overlapping cells, several senders owing the same deficit), the
/// charge is split equally and the corresponding flag records that the
/// clean reading of the rules no longer applies.
struct ChargeLedger {
    int t = 3;
    std::vector<Cell> cells;
    std::vector<std::array<Rational, 6>> vertex_charge;  // [vertex][stage]
    std::vector<std::array<Rational, 6>> cell_charge;    // [cell][stage]

    struct Transfer {
        int stage = 0;  // 1..5
        StructureRef from, to;
        Rational amount;
    };
    std::vector<Transfer> transfers;

    bool cells_pairwise_disjoint = true;
    bool multi_sender_split = false;

    std::array<Rational, 6> stage_totals;
    std::vector<StructureRef> negative_final;
};

/// Stage-0 charges: 15 deg - 2 wt - 34 on vertices of degree >= 3, zero on
/// degree-2 vertices. Requires min degree 2, no closed strings, and no pure
/// cycle components (weights are undefined otherwise); under those
/// preconditions the total is 30 e - 34 v exactly.
struct InitialCharges {
    std::vector<Rational> vertex_charge;
    Rational total;
};
InitialCharges initial_charges(const Graph& g);

ChargeLedger run_discharging(const Graph& g, int t = 3);

/// The one-rule discharge behind the basic density bound: start every vertex
/// at 4t deg - 8t - 2 and let each degree-2 vertex send -1 to both endpoints
/// of its string.
struct BasicDischargeReport {
    int t = 3;
    std::vector<Rational> initial, final_charge;
    Rational total;
    bool deg3_all_at_least_2 = true;
    bool deg2_all_zero = true;
};
BasicDischargeReport basic_density_discharge(const Graph& g, int t);

} // namespace oddhom
