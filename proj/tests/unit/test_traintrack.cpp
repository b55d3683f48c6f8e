#include <doctest.h>

#include "iwip/realize.hpp"
#include "iwip/traintrack.hpp"

using namespace iwip;

namespace {

std::shared_ptr<const Graph> rose(std::vector<std::string> labels) {
  return std::make_shared<const Graph>(make_rose(labels));
}

GraphMap rose_map(const std::shared_ptr<const Graph>& g, const std::vector<std::string>& images) {
  std::vector<EdgeWord> positive;
  for (const auto& w : images) positive.push_back(parse_word(*g, w));
  return GraphMap(g, {Vertex{0}}, positive);
}

std::vector<std::vector<std::string>> gate_tokens(const Graph& g, const GateStructure& gates) {
  std::vector<std::vector<std::string>> out;
  for (int k = 0; k < gates.gate_count(); ++k) {
    std::vector<std::string> tokens;
    for (Edge e : gates.members(k)) tokens.push_back(g.token(e));
    out.push_back(tokens);
  }
  return out;
}

}  // namespace

TEST_CASE("direction map of the Fibonacci rose map") {
  auto g = rose({"a", "b"});
  const auto df = direction_map(rose_map(g, {"a b", "a"}));
  CHECK(format_word(*g, df) == "a ~b a ~a");
  const auto id = direction_map(GraphMap::identity(g));
  for (int e = 0; e < 4; ++e) CHECK(id[static_cast<std::size_t>(e)] == Edge{e});
}

TEST_CASE("direction of h_t at a1 is the first edge of v") {
  const Blueprint bp = validate_and_classify(7, {1, 2, 1, 2, 2});
  const Gamma gamma = build_graph(bp);
  const PathSelectors sel = select_paths(gamma, bp);
  REQUIRE_FALSE(sel.gate_turns.empty());
  for (const auto& t : sel.gate_turns) {
    const NamedMap h_t = build_h_t(gamma, t);
    CHECK(direction_map(*h_t.map)[static_cast<std::size_t>(gamma.a1().id)] == t.v.front());
  }
}

TEST_CASE("train track morphism checks") {
  auto g = rose({"a", "b"});
  const GateStructure singles = GateStructure::singletons(*g);
  CHECK(check_train_track_morphism(GraphMap::identity(g), singles).ok());

  const auto bad = check_train_track_morphism(rose_map(g, {"a ~a", "b"}), singles);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.violations.front().kind == TrainTrackViolation::Kind::IllegalImage);

  const RealizationResult r = realize(7, {1, 2, 1, 2, 2});
  CHECK(check_train_track_morphism(r.h(), r.gamma.gates).ok());
  CHECK(check_train_track_morphism(r.g(), r.gamma.gates).ok());
}

TEST_CASE("intrinsic gates") {
  auto g = rose({"a", "b"});
  const MapChain fib(rose_map(g, {"a b", "a"}));
  CHECK(is_classical_train_track(fib));
  const GateStructure gates = intrinsic_gate_structure(fib);
  CHECK(gate_tokens(*g, gates) == std::vector<std::vector<std::string>>{{"a", "b"}, {"~a"}, {"~b"}});
  CHECK(gate_index_list(gates, periodic_vertices(fib)).to_string() == "[1/2]");

  const MapChain swap(rose_map(g, {"b", "a"}));
  CHECK(intrinsic_gate_structure(swap) == GateStructure::singletons(*g));

  const MapChain folded(rose_map(g, {"a ~a b", "b"}));
  CHECK_FALSE(is_classical_train_track(folded));
  CHECK_THROWS_AS(intrinsic_gate_structure(folded), NotTrainTrackError);
}

TEST_CASE("intrinsic gates of realized maps are the constructed gates") {
  for (const auto& [rank, list] : std::vector<std::pair<int, std::vector<int>>>{
           {7, {1, 2, 1, 2, 2}}, {8, {2, 2, 1, 2, 2}}, {6, {2, 2, 1, 2, 2}}, {3, {1}}}) {
    const RealizationResult r = realize(rank, list);
    CHECK(intrinsic_gate_structure(r.g()) == r.gamma.gates);
    CHECK(intrinsic_gate_structure(r.final_map()) == r.gamma.gates);
  }
}

TEST_CASE("Whitehead graphs of h") {
  for (const auto& [rank, list] : std::vector<std::pair<int, std::vector<int>>>{{7, {1, 2, 1, 2, 2}}, {8, {2, 2, 1, 2, 2}}}) {
    const RealizationResult r = realize(rank, list);
    const MapChain h = r.h();
    for (int v = 0; v < r.gamma.graph->vertex_count(); ++v) CHECK(gate_whitehead_graph(h, r.gamma.gates, Vertex{v}).complete());
  }

  const RealizationResult max_odd = realize(6, {2, 2, 1, 2, 2});
  REQUIRE(max_odd.blueprint.kind == RealizationCase::MaxOdd);
  const GateStructure& gates = max_odd.gamma.gates;
  const WhiteheadGraph w = gate_whitehead_graph(max_odd.h(), gates, max_odd.gamma.v1());
  CHECK(w.connected());
  const int bar_a1 = gates.gate_of(max_odd.gamma.a1().reversed());
  const int g1 = gates.gate_of(max_odd.gamma.a1());
  CHECK(std::find(w.edges.begin(), w.edges.end(), std::pair{std::min(bar_a1, g1), std::max(bar_a1, g1)}) != w.edges.end());

  const WhiteheadGraph empty = gate_whitehead_graph(MapChain(max_odd.gamma.graph), gates, max_odd.gamma.v1());
  CHECK(empty.edges.empty());
}

TEST_CASE("gate index list of the even-case graph") {
  const Gamma gamma = build_graph(validate_and_classify(7, {1, 2, 1, 2, 2}));
  std::vector<Vertex> all;
  for (int v = 0; v < gamma.graph->vertex_count(); ++v) all.push_back(Vertex{v});
  CHECK(gate_index_list(gamma.gates, all).to_string() == "[1, 1, 1, 1/2, 1/2]");
  CHECK(gate_index_list(gamma.gates, {Vertex{0}}).to_string() == "[1/2]");
}

TEST_CASE("periodic vertices") {
  auto g = rose({"a", "b"});
  CHECK(periodic_vertices(MapChain(rose_map(g, {"a b", "a"}))) == std::vector<Vertex>{Vertex{0}});

  Graph two;
  const Vertex p = two.add_vertex("p");
  const Vertex q = two.add_vertex("q");
  const Edge x = two.add_edge("x", p, q);
  const Edge y = two.add_edge("y", q, p);
  const Edge z = two.add_edge("z", p, p);
  const Edge w = two.add_edge("w", q, q);
  auto gp = std::make_shared<const Graph>(two);
  const GraphMap swap(gp, {q, p}, {{y}, {x}, {w}, {z}});
  CHECK(periodic_vertices(MapChain(swap)) == std::vector<Vertex>{p, q});
}
