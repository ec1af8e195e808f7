#pragma once

#include <string>

#include "json.hpp"

#include "dpd/cover.hpp"
#include "dpd/discharge.hpp"
#include "dpd/lint.hpp"
#include "dpd/patterns.hpp"
#include "dpd/plane_graph.hpp"
#include "dpd/reduce.hpp"

namespace dpd {

using nlohmann::json;

// Graph wire format:
//   {"n": <int>, "rotations": [[<int>,...],...], "outer_face": [<int>,...]}
// Unknown keys warn (collected into *warnings) but do not fail.
PlaneGraph graph_from_json(const json& j, std::vector<std::string>* warnings = nullptr);
json graph_to_json(const PlaneGraph& g);

// Cover wire format (1-based colors, mirroring [s]):
//   {"s": <int>, "matchings": [{"u":..,"v":..,"pairs":[[i,j],...]},...],
//    "f": [[..],..]}  -- omitted "f" defaults to all ones.
std::pair<Cover, WeightFn> cover_from_json(const BaseGraph& g, const json& j);

json lint_report_to_json(const LintReport& rep);
json matches_to_json(const std::vector<PatternMatch>& ms, const Pattern& p);
json clusters_to_json(const PlaneGraph& g, const std::vector<Cluster>& cs);
json ledger_to_json(const ChargeLedger& led, const PlaneGraph& g);
json discharge_report_to_json(const DischargeReport& rep, const PlaneGraph& g);
json oracle_result_to_json(const OracleResult& res, const std::string& pattern_id,
                           const OracleOptions& opt);
OracleWitness witness_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace dpd
