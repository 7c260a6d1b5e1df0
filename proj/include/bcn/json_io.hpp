#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "bcn/network.hpp"
#include "bcn/stabilization.hpp"

namespace bcn {

using json = nlohmann::json;

/// {rows, cols, delta:[1-based unit indices]}; round-trips bit-exactly.
json to_json(const LogicalMatrix& m);
LogicalMatrix logical_from_json(const json& j);

/// {rows, cols, bits:["0101...", ...]} row-major bitstrings.
json to_json(const BooleanMatrix& m);
BooleanMatrix boolean_from_json(const json& j);

/// Model files: {n?, m?, N, M, F:{...}} or {..., modes:[{p, F}]}, plus an
/// optional 1-based "target" array.
json model_to_json(const AssembledModel& model);
AssembledModel model_from_json(const json& j);

/// Blocks as 1-based member lists.
json partition_to_json(const Partition& partition);

/// {criterion, holds, k_star, partition, quotient}.
json reduce_report_json(const std::string& criterion, bool holds, const MaxBisimResult& result,
                        const QuotientWeak* weak, const QuotientStrong* strong);

json stabilization_report_json(const StabilizationReport& report);

/// {stabilizable, l_star, layers, theta, canonical_G, family_size}.
json synthesis_report_json(const StabilizationReport& report, const SynthesisResult& synthesis);

/// One-step reachability digraph in DOT format; 1-based node names.
std::string dot_digraph(const BooleanMatrix& reach1, const std::string& name);

/// "step,state_index" lines for a single trajectory (1-based states).
std::string trajectory_csv(const std::vector<int>& trajectory);

/// "initial_state,step,state" lines covering every initial state.
std::string all_trajectories_csv(const BcnModel& model, const LogicalMatrix& feedback, int steps);

}  // namespace bcn
