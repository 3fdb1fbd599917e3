#pragma once

// Wire formats. Labels are always written as decimal strings.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hpt/label.hpp"
#include "hpt/locator.hpp"
#include "hpt/oracle.hpp"
#include "hpt/planner.hpp"
#include "hpt/triangle.hpp"
#include "hpt/walker.hpp"

namespace hpt {

using Json = nlohmann::ordered_json;

/// {"q":int,"n":int,"entries":[{"label":"<decimal>","kind":"A|B|WL|WR|Base"}]}
Json row_to_json(int q, const Row& row);
Row row_from_json(const Json& j);

/// Header "n,k,kind,label" followed by one line per entry.
std::string rows_to_csv(std::span<const Row> rows);

/// Array of decimal strings.
Json sequence_to_json(std::span<const Label> seq);

/// Array of ["w","a","b"] triples.
Json trace_to_json(const PathTrace& trace);

/// {"pattern":"L2R","start":{"w":..,"a":..,"b":..},"extraction":..,"j":int,"m":".."}
Json plan_to_json(const RepresentationPlan& plan);
RepresentationPlan plan_from_json(const Json& j);

/// {"q":int,"script":["KL","KR","DD",...]}
Json witness_to_json(const PairWitness& witness);
PairWitness witness_from_json(const Json& j);

Json diff_to_json(const DiffReport& report);

/// Layered graph with label and kind attributes per vertex.
std::string graph_to_dot(const LayeredGraph& graph, std::span<const Label> labels);

/// Standalone TikZ picture: A circled, B as diamonds, wingers hollow.
std::string rows_to_tikz(int q, std::span<const Row> rows);

}  // namespace hpt
