#pragma once

#include <span>
#include <vector>

#include "iwip/graph.hpp"

namespace iwip {

// Unordered pair of directed edges with a common initial vertex, stored with
// first <= second.
struct Turn {
  Edge first;
  Edge second;

  static Turn of(Edge a, Edge b) { return a <= b ? Turn{a, b} : Turn{b, a}; }
  bool degenerate() const { return first == second; }
  friend auto operator<=>(const Turn&, const Turn&) = default;
};

// Partition of the directed edges into gates, each gate living at one vertex.
// Gate ids are canonical: gates are numbered by their smallest edge id, so two
// structures describing the same partition compare equal.
class GateStructure {
 public:
  GateStructure() = default;
  // Throws GraphError unless every directed edge is in exactly one class and
  // each class sits at a single vertex.
  GateStructure(const Graph& g, const std::vector<std::vector<Edge>>& classes);

  static GateStructure singletons(const Graph& g);
  // Classes given by an arbitrary label per directed edge.
  static GateStructure from_labels(const Graph& g, std::span<const int> label);

  int gate_of(Edge e) const { return gate_of_[static_cast<std::size_t>(e.id)]; }
  bool same_gate(Edge a, Edge b) const { return gate_of(a) == gate_of(b); }
  int gate_count() const { return static_cast<int>(members_.size()); }
  const std::vector<Edge>& members(int gate) const { return members_[static_cast<std::size_t>(gate)]; }
  Vertex vertex_of(int gate) const { return vertex_of_[static_cast<std::size_t>(gate)]; }
  std::vector<int> gates_at(Vertex v) const;
  int gate_count_at(Vertex v) const { return static_cast<int>(gates_at(v).size()); }
  int directed_count() const { return static_cast<int>(gate_of_.size()); }

  friend bool operator==(const GateStructure&, const GateStructure&) = default;

 private:
  std::vector<int> gate_of_;
  std::vector<std::vector<Edge>> members_;
  std::vector<Vertex> vertex_of_;
};

bool is_legal_turn(const GateStructure& gates, Turn t);
// A path is legal when it is reduced and every turn ~e_k, e_{k+1} it crosses
// is legal.
bool is_legal_path(const GateStructure& gates, std::span<const Edge> w);

// Non-degenerate turns whose edges share a gate, sorted.
std::vector<Turn> illegal_turns(const Graph& g, const GateStructure& gates);
// All non-degenerate turns of the graph, sorted.
std::vector<Turn> all_turns(const Graph& g);

// Turns crossed by a word: (~w_k, w_{k+1}) for consecutive letters.
std::vector<Turn> crossed_turns(std::span<const Edge> w);

// Legal one-edge continuations of a path ending in `last`.
std::vector<Edge> legal_continuations(const Graph& g, const GateStructure& gates, Edge last);

// Symmetric set of turns (degenerate ones included) over the directed edges.
class TurnSet {
 public:
  TurnSet() = default;
  explicit TurnSet(int directed_count)
      : n_(directed_count), bits_(static_cast<std::size_t>(directed_count) * directed_count, 0) {}

  void insert(Turn t) {
    bits_[index(t.first, t.second)] = 1;
    bits_[index(t.second, t.first)] = 1;
  }
  bool contains(Turn t) const { return bits_[index(t.first, t.second)] != 0; }
  bool merge(const TurnSet& other);  // true when something was added
  std::vector<Turn> turns() const;
  int directed_count() const { return n_; }

 private:
  std::size_t index(Edge a, Edge b) const {
    return static_cast<std::size_t>(a.id) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b.id);
  }
  int n_ = 0;
  std::vector<unsigned char> bits_;
};

}  // namespace iwip
