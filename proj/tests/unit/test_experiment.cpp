#include <doctest.h>

#include <set>

#include "iwip/experiment.hpp"
#include "iwip/json_io.hpp"
#include "iwip/traintrack.hpp"

using namespace iwip;

TEST_CASE("single elementary factors on two petals") {
  std::set<std::pair<std::string, std::string>> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GraphMap f = sample_positive_automorphism(2, 1, seed);
    const Graph& g = f.graph();
    seen.emplace(format_word(g, f.image(Edge{0})), format_word(g, f.image(Edge{2})));
  }
  const std::set<std::pair<std::string, std::string>> all{{"a b", "b"}, {"b a", "b"}, {"a", "b a"}, {"a", "a b"}};
  CHECK(seen == all);
}

TEST_CASE("sampling is deterministic") {
  const GraphMap a = sample_positive_automorphism(4, 12, 99);
  const GraphMap b = sample_positive_automorphism(4, 12, 99);
  CHECK(map_to_json(a).dump() == map_to_json(b).dump());
  CHECK(map_to_json(a).dump() != map_to_json(sample_positive_automorphism(4, 12, 100)).dump());
  CHECK(sample_seed(7, 0) != sample_seed(7, 1));
}

TEST_CASE("samples are positive train track maps") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const MapChain chain = sample_positive_factors(3, 10, seed);
    const auto f = chain.materialize(1'000'000);
    REQUIRE(f);
    for (Edge e : f->graph().positive_edges())
      for (Edge x : f->image(e)) CHECK(x.positive());
    CHECK(is_classical_train_track(chain));
    CHECK(check_composite_train_track(chain, intrinsic_gate_structure(chain)).ok());
  }
}

TEST_CASE("experiment tables") {
  const FrequencyTable empty = run_experiment(3, 26, 0, 7);
  CHECK(empty.counts.empty());
  CHECK(empty.conditional + empty.inp_present + empty.non_expanding + empty.other == 0);

  ExperimentOptions one_thread;
  one_thread.threads = 1;
  ExperimentOptions many;
  many.threads = 4;
  const FrequencyTable a = run_experiment(3, 12, 30, 5, one_thread);
  const FrequencyTable b = run_experiment(3, 12, 30, 5, many);
  CHECK(table_to_json(a, false).dump() == table_to_json(b, false).dump());
  CHECK(a.conditional + a.inp_present + a.non_expanding + a.other == 30);
  int listed = 0;
  for (const auto& [list, n] : a.counts) {
    CHECK(list.doubled_sum() <= 2 * (3 - 1));
    listed += n;
  }
  CHECK(listed == a.conditional);
  CHECK(format_table(a, 5, false).find("conditional") != std::string::npos);
}
