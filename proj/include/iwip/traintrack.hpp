#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwip/gates.hpp"
#include "iwip/index_list.hpp"
#include "iwip/map_chain.hpp"

namespace iwip {

class NotTrainTrackError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Edge> direction_map(const GraphMap& f);
std::vector<Edge> direction_map(const MapChain& f);

struct TrainTrackViolation {
  enum class Kind { ContractedEdge, IllegalImage, IllegalTurnImage, VertexMismatch };
  Kind kind;
  std::size_t factor = 0;  // factor index within a chain
  Edge edge{};             // offending edge, or first edge of the turn
  Edge other{};            // second edge of the turn
  std::string message;
};

struct TrainTrackDiagnostics {
  std::vector<TrainTrackViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks that f sends no edge to a point, every edge to a legal path, and
// legal turns to legal turns, for the same gate structure on both sides.
TrainTrackDiagnostics check_train_track_morphism(const GraphMap& f, const GateStructure& gates);
// Factor-wise check; a composite of train track morphisms is one.
TrainTrackDiagnostics check_train_track_morphism(const MapChain& f, const GateStructure& gates);
// Check of the composite itself, for gates that single factors need not respect.
TrainTrackDiagnostics check_composite_train_track(const MapChain& f, const GateStructure& gates);

// Turns taken by iterated edge images: the Df-closure of the turns crossed
// by the images of edges.
TurnSet taken_turns(const MapChain& f);
// True when every iterate f^k(e) is a reduced path.
bool is_classical_train_track(const MapChain& f);

// e and e' share a gate when some iterate of Df identifies them. Throws
// NotTrainTrackError unless f is a classical train track map.
GateStructure intrinsic_gate_structure(const MapChain& f);

struct WhiteheadGraph {
  Vertex vertex;
  std::vector<int> gates;                   // nodes: gate ids at the vertex
  std::vector<std::pair<int, int>> edges;   // sorted, without repeats

  bool connected() const;
  bool complete() const;
};

// Gate projection of the turns taken by iterated edge images at v.
WhiteheadGraph gate_whitehead_graph(const MapChain& f, const GateStructure& gates, Vertex v);

std::vector<Vertex> periodic_vertices(const MapChain& f);

// One entry (gates/2 - 1) per vertex listed with at least three gates.
IndexList gate_index_list(const GateStructure& gates, const std::vector<Vertex>& vertices);

}  // namespace iwip
