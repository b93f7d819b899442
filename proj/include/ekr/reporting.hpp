// Report assembly: JSON serialization for every result structure, the
// envelope emitted by each tool invocation, and CSV / plain-text renderings.
#pragma once

#include "ekr/cycle.hpp"
#include "ekr/family.hpp"
#include "ekr/graph.hpp"
#include "ekr/sampler.hpp"
#include "ekr/search.hpp"
#include "ekr/shifting.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace ekr {

using Json = nlohmann::json;

std::string tool_version();
std::string iso_timestamp_utc();

std::string kind_name(GraphKind kind);  // "paths" | "claws"
std::string type_name(SetType type);    // "I" | "II" | "III"

// Sets travel as sorted 1-based id arrays; exact numbers travel as strings.
Json set_to_json(const VertexSet& s);
VertexSet set_from_json(const Json& j);
Json family_to_json(const Family& f);
Family family_from_json(const Json& j);

// "{x1, z2}" under the graph's naming.
std::string set_names(const Graph& g, const VertexSet& s);

Json to_json(const Graph& g);
Json to_json(const ShiftReport& r);
Json to_json(const CycleFamily& f);
Json to_json(const CycleBoundReport& r);
Json to_json(const PatternFamily& pf);
Json to_json(const ExactDistribution& d);
Json to_json(const IntermediateProbability& p);
Json to_json(const EkrVerdict& v);
Json to_json(const ScanRow& row);
Json to_json(const ChvatalVerdict& v);

// {tool, version, timestamp, command, config, result, pass}. Serialized with
// sorted keys, so equal reports dump byte-identically up to the timestamp.
Json make_report(const std::string& command, Json config, Json result, bool pass);

std::string scan_csv(const std::vector<ScanRow>& rows);

std::string shift_text(const ShiftReport& r);
std::string cycle_family_text(const Graph& g, const CycleFamily& f);
std::string cycle_bound_text(const CycleBoundReport& r);
std::string distribution_text(const ExactDistribution& d);
std::string ekr_text(const Graph& g, const EkrVerdict& v);
std::string scan_text(const std::vector<ScanRow>& rows);
std::string chvatal_text(const Graph& g, const ChvatalVerdict& v);

}  // namespace ekr
