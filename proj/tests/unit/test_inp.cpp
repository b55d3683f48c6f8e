#include <doctest.h>

#include "iwip/inp.hpp"
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

}  // namespace

TEST_CASE("Fibonacci square carries a periodic INP") {
  auto g = rose({"a", "b"});
  const MapChain fib(rose_map(g, {"a b", "a"}));
  const GateStructure gates = intrinsic_gate_structure(fib);
  const MapChain f2 = fib.power(2);
  const InpSearchResult res = find_periodic_inps(f2, gates);
  REQUIRE(res.verdict == InpVerdict::Found);
  REQUIRE_FALSE(res.found.empty());
  for (const Inp& p : res.found) {
    CHECK(p.verified_by_expansion);
    EdgeWord path = reversed(p.first);
    path.insert(path.end(), p.second.begin(), p.second.end());
    CHECK(is_legal_path(gates, p.first));
    CHECK(is_legal_path(gates, p.second));
    CHECK_FALSE(is_legal_turn(gates, Turn::of(p.first.front(), p.second.front())));
    const auto image = f2.power(p.period).apply(path, 100000);
    REQUIRE(image);
    CHECK(tighten(*image) == path);
  }
}

TEST_CASE("no illegal turn means no INP") {
  auto g = rose({"a"});
  const MapChain f(rose_map(g, {"a a"}));
  const GateStructure gates = intrinsic_gate_structure(f);
  CHECK(illegal_turns(*g, gates).empty());
  CHECK(find_periodic_inps(f, gates).verdict == InpVerdict::NoneFound);
}

TEST_CASE("non-expanding maps are rejected") {
  auto g = rose({"a", "b"});
  const MapChain f(rose_map(g, {"a b", "b"}));
  CHECK_THROWS_AS(find_periodic_inps(f, GateStructure::singletons(*g)), MapError);
}

TEST_CASE("realized maps have no periodic INP within bounds") {
  for (const auto& [rank, list] : std::vector<std::pair<int, std::vector<int>>>{
           {3, {1}}, {4, {3}}, {5, {2, 1, 1}}, {7, {1, 2, 1, 2, 2}}}) {
    const RealizationResult r = realize(rank, list);
    const auto res = find_periodic_inps(r.final_map(), r.gamma.gates);
    CHECK(res.verdict == InpVerdict::NoneFound);
  }
}

TEST_CASE("the commutator class is 2-periodic under the Fibonacci map") {
  auto g = rose({"a", "b"});
  const MapChain fib(rose_map(g, {"a b", "a"}));
  const GateStructure gates = intrinsic_gate_structure(fib);
  const EdgeWord w = parse_word(*g, "a b ~a ~b");

  // f(a b ~a ~b) = a b a ~b ~a ~a, cyclically b a ~b ~a: the inverse class, not the same one.
  const auto once = fib.apply(w, 100);
  REQUIRE(once);
  CHECK(tighten_cyclic(*once) == parse_word(*g, "b a ~b ~a"));
  CHECK_FALSE(cyclically_equal(tighten_cyclic(*once), w));

  const CyclicPeriodResult res = cyclic_word_period(fib, gates, w, 6);
  CHECK(res.verdict == CyclicVerdict::Periodic);
  CHECK(res.period == 2);

  const CyclicPeriodResult legal = cyclic_word_period(fib, gates, parse_word(*g, "a b"), 6);
  CHECK(legal.verdict == CyclicVerdict::NotPeriodic);
}
