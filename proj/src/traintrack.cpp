#include "iwip/traintrack.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace iwip {

std::vector<Edge> direction_map(const GraphMap& f) { return MapChain(f).direction_map(); }
std::vector<Edge> direction_map(const MapChain& f) { return f.direction_map(); }

namespace {

void check_factor(const GraphMap& f, const GateStructure& gates, std::size_t index,
                  TrainTrackDiagnostics& out) {
  const Graph& g = f.graph();
  using Kind = TrainTrackViolation::Kind;
  bool contracted = false;
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge e = Edge::positive_of(k);
    const auto img = f.image(e);
    if (img.empty()) {
      out.violations.push_back({Kind::ContractedEdge, index, e, e, "edge " + g.token(e) + " is contracted"});
      contracted = true;
      continue;
    }
    if (!is_reduced(img) || !is_legal_path(gates, img))
      out.violations.push_back({Kind::IllegalImage, index, e, e, "image of " + g.token(e) + " is not legal"});
  }
  if (contracted) return;
  for (const Turn& t : all_turns(g)) {
    if (!is_legal_turn(gates, t)) continue;
    const Edge a = f.image(t.first).front();
    const Edge b = f.image(t.second).front();
    if (a == b || gates.same_gate(a, b))
      out.violations.push_back({Kind::IllegalTurnImage, index, t.first, t.second,
                                "legal turn (" + g.token(t.first) + ", " + g.token(t.second) +
                                    ") maps to an illegal turn"});
  }
}

}  // namespace

TrainTrackDiagnostics check_train_track_morphism(const GraphMap& f, const GateStructure& gates) {
  TrainTrackDiagnostics out;
  check_factor(f, gates, 0, out);
  return out;
}

TrainTrackDiagnostics check_train_track_morphism(const MapChain& f, const GateStructure& gates) {
  TrainTrackDiagnostics out;
  for (std::size_t i = 0; i < f.factor_count(); ++i) check_factor(f.factor(i), gates, i, out);
  return out;
}

TrainTrackDiagnostics check_composite_train_track(const MapChain& f, const GateStructure& gates) {
  using Kind = TrainTrackViolation::Kind;
  const Graph& g = f.graph();
  TrainTrackDiagnostics out;
  std::vector<Edge> df;
  try {
    df = f.direction_map();
  } catch (const MapError& e) {
    out.violations.push_back({Kind::ContractedEdge, 0, Edge{}, Edge{}, e.what()});
    return out;
  }
  for (const Turn& t : f.crossed_turns().turns()) {
    if (t.first > t.second || is_legal_turn(gates, t)) continue;
    out.violations.push_back({Kind::IllegalImage, 0, t.first, t.second,
                              "an edge image crosses the illegal turn (" + g.token(t.first) + ", " +
                                  g.token(t.second) + ")"});
  }
  for (const Turn& t : all_turns(g)) {
    if (!is_legal_turn(gates, t)) continue;
    const Edge a = df[static_cast<std::size_t>(t.first.id)];
    const Edge b = df[static_cast<std::size_t>(t.second.id)];
    if (a == b || gates.same_gate(a, b))
      out.violations.push_back({Kind::IllegalTurnImage, 0, t.first, t.second,
                                "legal turn (" + g.token(t.first) + ", " + g.token(t.second) +
                                    ") maps to an illegal turn"});
  }
  return out;
}

TurnSet taken_turns(const MapChain& f) {
  TurnSet closure = f.crossed_turns();
  const auto df = f.direction_map();
  std::vector<Turn> frontier = closure.turns();
  while (!frontier.empty()) {
    std::vector<Turn> next;
    for (const Turn& t : frontier) {
      const Turn image = Turn::of(df[static_cast<std::size_t>(t.first.id)], df[static_cast<std::size_t>(t.second.id)]);
      if (!closure.contains(image)) {
        closure.insert(image);
        next.push_back(image);
      }
    }
    frontier = std::move(next);
  }
  return closure;
}

bool is_classical_train_track(const MapChain& f) {
  for (const Turn& t : taken_turns(f).turns())
    if (t.degenerate()) return false;
  return true;
}

GateStructure intrinsic_gate_structure(const MapChain& f) {
  if (!is_classical_train_track(f)) throw NotTrainTrackError("some iterated edge image is not reduced");
  const auto df = f.direction_map();
  const int d = f.graph().directed_count();
  // Identified pairs stay identified, and after d steps Df is a bijection on
  // its eventual image, so comparing Df^d decides every pair.
  std::vector<Edge> image(static_cast<std::size_t>(d));
  for (int id = 0; id < d; ++id) {
    Edge x{id};
    for (int t = 0; t < d; ++t) x = df[static_cast<std::size_t>(x.id)];
    image[static_cast<std::size_t>(id)] = x;
  }
  std::vector<int> label(static_cast<std::size_t>(d));
  for (int id = 0; id < d; ++id) label[static_cast<std::size_t>(id)] = image[static_cast<std::size_t>(id)].id;
  return GateStructure::from_labels(f.graph(), label);
}

bool WhiteheadGraph::connected() const {
  if (gates.empty()) return true;
  std::vector<int> parent(gates.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto slot = [&](int gate) {
    return static_cast<int>(std::lower_bound(gates.begin(), gates.end(), gate) - gates.begin());
  };
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::size_t components = gates.size();
  for (const auto& [a, b] : edges) {
    const int ra = find(slot(a));
    const int rb = find(slot(b));
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --components;
    }
  }
  return components == 1;
}

bool WhiteheadGraph::complete() const {
  const std::size_t n = gates.size();
  return edges.size() == n * (n - 1) / 2;
}

WhiteheadGraph gate_whitehead_graph(const MapChain& f, const GateStructure& gates, Vertex v) {
  const Graph& g = f.graph();
  WhiteheadGraph wg;
  wg.vertex = v;
  wg.gates = gates.gates_at(v);
  std::set<std::pair<int, int>> edges;
  for (const Turn& t : taken_turns(f).turns()) {
    if (g.init(t.first) != v) continue;
    const int a = gates.gate_of(t.first);
    const int b = gates.gate_of(t.second);
    if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
  }
  wg.edges.assign(edges.begin(), edges.end());
  return wg;
}

std::vector<Vertex> periodic_vertices(const MapChain& f) {
  const auto vm = f.vertex_map();
  const int n = static_cast<int>(vm.size());
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v) {
    Vertex x{v};
    for (int t = 0; t < n; ++t) {
      x = vm[static_cast<std::size_t>(x.id)];
      if (x.id == v) {
        out.push_back(Vertex{v});
        break;
      }
    }
  }
  return out;
}

IndexList gate_index_list(const GateStructure& gates, const std::vector<Vertex>& vertices) {
  std::vector<int> doubled;
  for (Vertex v : vertices) {
    const int count = gates.gate_count_at(v);
    if (count >= 3) doubled.push_back(count - 2);
  }
  return IndexList(std::move(doubled));
}

}  // namespace iwip
