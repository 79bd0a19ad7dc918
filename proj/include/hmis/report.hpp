#pragma once

#include <string>

#include <json.hpp>

#include "hmis/analysis.hpp"
#include "hmis/bl.hpp"
#include "hmis/degree.hpp"
#include "hmis/sbl.hpp"

namespace hmis {

using json = nlohmann::ordered_json;

json ids_json(const VertexSet& s);

/// Exactly: round, marked, unmarked, added, remaining_vertices,
/// remaining_edges, delta, p_used.
json to_json(const BlRoundRecord& r);
json to_json(const SblRoundRecord& r);
json to_json(const SblParams& p);
json to_json(const DegreeProfile& p);
json to_json(const PotentialReport& r);
json to_json(const BoundConstants& c);
json to_json(const FInequalityRow& row);

/// One compact JSON object per line.
std::string trace_jsonl(const BlResult& r);
std::string trace_jsonl(const SblResult& r);

/// { mis, status, rounds_used, retries_total, fallback } plus loop details.
json result_json(const SblResult& r);

}  // namespace hmis
