#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "iwip/certify.hpp"
#include "iwip/experiment.hpp"
#include "iwip/realize.hpp"

namespace iwip {

using Json = nlohmann::ordered_json;

// Malformed documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json graph_to_json(const Graph& g);
std::shared_ptr<const Graph> graph_from_json(const Json& j);

Json gates_to_json(const Graph& g, const GateStructure& gates);
GateStructure gates_from_json(const Graph& g, const Json& j);

Json word_to_json(const Graph& g, std::span<const Edge> w);
EdgeWord word_from_json(const Graph& g, const Json& j);

// {"images": {"c1": ["c1", "a1"], ...}} plus "vertices" when some vertex moves.
Json map_to_json(const GraphMap& f);
GraphMap map_from_json(std::shared_ptr<const Graph> graph, const Json& j);

Json index_list_to_json(const IndexList& list);

Json realization_to_json(const RealizationResult& result);
RealizationResult realization_from_json(const Json& j);

Json report_to_json(const CertificationReport& report);
Json table_to_json(const FrequencyTable& table, bool include_timing = true);

// A document holding a single train track map: {"graph": ..., "map": ...}
// or {"graph": ..., "factors": [map, ...]} with factors outermost first.
bool is_realization_document(const Json& j);
MapChain chain_from_json(const Json& j);

std::string realization_summary(const RealizationResult& result);
std::string report_summary(const CertificationReport& report);

}  // namespace iwip
