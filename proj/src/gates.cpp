#include "iwip/gates.hpp"

#include <algorithm>
#include <map>

namespace iwip {

GateStructure::GateStructure(const Graph& g, const std::vector<std::vector<Edge>>& classes) {
  std::vector<int> label(static_cast<std::size_t>(g.directed_count()), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw GraphError("empty gate");
    const Vertex v = g.init(classes[c].front());
    for (Edge e : classes[c]) {
      if (e.id < 0 || e.id >= g.directed_count()) throw GraphError("gate edge out of range");
      if (label[static_cast<std::size_t>(e.id)] != -1)
        throw GraphError("edge " + g.token(e) + " lies in two gates");
      if (g.init(e) != v) throw GraphError("gate mixes vertices at " + g.token(e));
      label[static_cast<std::size_t>(e.id)] = static_cast<int>(c);
    }
  }
  for (int id = 0; id < g.directed_count(); ++id)
    if (label[static_cast<std::size_t>(id)] == -1)
      throw GraphError("edge " + g.token(Edge{id}) + " lies in no gate");
  *this = from_labels(g, label);
}

GateStructure GateStructure::singletons(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.directed_count()));
  for (int id = 0; id < g.directed_count(); ++id) label[static_cast<std::size_t>(id)] = id;
  return from_labels(g, label);
}

GateStructure GateStructure::from_labels(const Graph& g, std::span<const int> label) {
  if (static_cast<int>(label.size()) != g.directed_count()) throw GraphError("gate label size mismatch");
  GateStructure s;
  s.gate_of_.assign(label.size(), -1);
  std::map<int, int> renumber;
  for (int id = 0; id < g.directed_count(); ++id) {
    const Edge e{id};
    auto [it, fresh] = renumber.try_emplace(label[static_cast<std::size_t>(id)], s.gate_count());
    if (fresh) {
      s.members_.emplace_back();
      s.vertex_of_.push_back(g.init(e));
    } else if (s.vertex_of_[static_cast<std::size_t>(it->second)] != g.init(e)) {
      throw GraphError("gate mixes vertices at " + g.token(e));
    }
    s.gate_of_[static_cast<std::size_t>(id)] = it->second;
    s.members_[static_cast<std::size_t>(it->second)].push_back(e);
  }
  return s;
}

std::vector<int> GateStructure::gates_at(Vertex v) const {
  std::vector<int> out;
  for (int gate = 0; gate < gate_count(); ++gate)
    if (vertex_of(gate) == v) out.push_back(gate);
  return out;
}

bool is_legal_turn(const GateStructure& gates, Turn t) { return !gates.same_gate(t.first, t.second); }

bool is_legal_path(const GateStructure& gates, std::span<const Edge> w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (gates.same_gate(w[i - 1].reversed(), w[i])) return false;
  return true;
}

std::vector<Turn> illegal_turns(const Graph& g, const GateStructure& gates) {
  std::vector<Turn> out;
  for (int a = 0; a < g.directed_count(); ++a)
    for (int b = a + 1; b < g.directed_count(); ++b)
      if (gates.same_gate(Edge{a}, Edge{b})) out.push_back(Turn{Edge{a}, Edge{b}});
  return out;
}

std::vector<Turn> all_turns(const Graph& g) {
  std::vector<Turn> out;
  for (int a = 0; a < g.directed_count(); ++a)
    for (int b = a + 1; b < g.directed_count(); ++b)
      if (g.init(Edge{a}) == g.init(Edge{b})) out.push_back(Turn{Edge{a}, Edge{b}});
  return out;
}

std::vector<Turn> crossed_turns(std::span<const Edge> w) {
  std::vector<Turn> out;
  for (std::size_t i = 1; i < w.size(); ++i) out.push_back(Turn::of(w[i - 1].reversed(), w[i]));
  return out;
}

std::vector<Edge> legal_continuations(const Graph& g, const GateStructure& gates, Edge last) {
  std::vector<Edge> out;
  const int blocked = gates.gate_of(last.reversed());
  for (Edge x : g.outgoing(g.terminal(last)))
    if (gates.gate_of(x) != blocked) out.push_back(x);
  return out;
}

bool TurnSet::merge(const TurnSet& other) {
  bool grew = false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (other.bits_[i] && !bits_[i]) {
      bits_[i] = 1;
      grew = true;
    }
  }
  return grew;
}

std::vector<Turn> TurnSet::turns() const {
  std::vector<Turn> out;
  for (int a = 0; a < n_; ++a)
    for (int b = a; b < n_; ++b)
      if (bits_[index(Edge{a}, Edge{b})]) out.push_back(Turn{Edge{a}, Edge{b}});
  return out;
}

}  // namespace iwip
