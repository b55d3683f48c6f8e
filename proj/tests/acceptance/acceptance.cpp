// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "iwip/certify.hpp"
#include "iwip/experiment.hpp"
#include "iwip/inp.hpp"
#include "iwip/json_io.hpp"
#include "iwip/long_turns.hpp"
#include "iwip/matrix.hpp"
#include "iwip/realize.hpp"
#include "iwip/traintrack.hpp"

using namespace iwip;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS " : "FAIL ") << id << "  " << what;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
}

struct Instance {
  int rank;
  IndexList list;
  RealizationResult result;
  CertificationReport report;
};

std::vector<Instance> realize_all(int lo, int hi, std::vector<std::string>& errors) {
  std::vector<Instance> out;
  for (int rank = lo; rank <= hi; ++rank) {
    for (const IndexList& list : enumerate_admissible(rank)) {
      try {
        RealizationResult r = realize(rank, list.doubled());
        CertificationReport rep = certify_realization(r);
        out.push_back({rank, list, std::move(r), std::move(rep)});
      } catch (const std::exception& e) {
        errors.push_back("N=" + std::to_string(rank) + " " + list.to_string() + ": " + e.what());
      }
    }
  }
  return out;
}

// Legal edge paths of length n starting with e.
void legal_paths(const Graph& g, const GateStructure& gates, EdgeWord& prefix, int n, std::vector<EdgeWord>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  for (Edge x : g.outgoing(g.terminal(prefix.back()))) {
    prefix.push_back(x);
    if (is_legal_path(gates, prefix)) legal_paths(g, gates, prefix, n, out);
    prefix.pop_back();
  }
}

std::shared_ptr<const Graph> rose(std::vector<std::string> labels) {
  return std::make_shared<const Graph>(make_rose(labels));
}

GraphMap rose_map(const std::shared_ptr<const Graph>& g, const std::vector<std::string>& images) {
  std::vector<EdgeWord> positive;
  for (const auto& w : images) positive.push_back(parse_word(*g, w));
  return GraphMap(g, {Vertex{0}}, positive);
}

void criterion_exhaustive(const std::vector<Instance>& all, const std::vector<std::string>& errors, double seconds) {
  int full = 0;
  int exact = 0;
  std::string first_bad;
  for (const auto& in : all) {
    const bool is_full = in.report.level == CertificationLevel::FullTheorem62;
    const bool matches = in.report.index_list == in.list;
    full += is_full;
    exact += matches;
    if ((!is_full || !matches) && first_bad.empty())
      first_bad = "N=" + std::to_string(in.rank) + " " + in.list.to_string() + " -> " + in.report.index_list.to_string();
  }
  int expected = 0;
  for (int rank = 3; rank <= 6; ++rank) expected += static_cast<int>(enumerate_admissible(rank).size());
  std::ostringstream d;
  d << all.size() << "/" << expected << " realized, " << full << " full_theorem_62, " << exact << " exact lists, "
    << static_cast<int>(seconds) << " s";
  if (!errors.empty()) d << "; first error: " << errors.front();
  if (!first_bad.empty()) d << "; first mismatch: " << first_bad;
  const bool ok = errors.empty() && static_cast<int>(all.size()) == expected && full == expected && exact == expected;
  report("1", ok, "exhaustive realization and certification for 3 <= N <= 6", d.str());
}

void criterion_deficits(const std::vector<Instance>& all) {
  std::set<int> attained;
  for (const auto& in : all)
    if (in.rank == 5 && in.report.level == CertificationLevel::FullTheorem62 && in.report.index_list == in.list)
      attained.insert(in.list.doubled_sum());
  const std::set<int> wanted{1, 2, 3, 4, 5, 6, 7};
  std::string got;
  for (int d : attained) got += (got.empty() ? "" : " ") + format_half(d);
  report("2", attained == wanted, "every index deficit 1/2 .. 7/2 attained for N = 5", "attained: " + got);
}

void criterion_selectors(const std::vector<Instance>& all) {
  int bad = 0;
  std::string first;
  for (const auto& in : all) {
    const auto problems = check_selectors(in.result.gamma, in.result.blueprint, *in.result.selectors);
    if (!problems.empty()) {
      ++bad;
      if (first.empty()) first = in.list.to_string() + ": " + problems.front();
    }
  }
  report("3a", bad == 0, "selected paths satisfy their clauses on every instance",
         std::to_string(all.size() - static_cast<std::size_t>(bad)) + "/" + std::to_string(all.size()) +
             (first.empty() ? "" : "; " + first));
}

void criterion_h(const std::vector<Instance>& all) {
  int positive = 0, connected = 0, complete = 0, complete_expected = 0;
  for (const auto& in : all) {
    const MapChain h = in.result.h();
    positive += is_positive(h.support_matrix());
    const Graph& g = *in.result.gamma.graph;
    bool all_connected = true, all_complete = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const WhiteheadGraph w = gate_whitehead_graph(h, in.result.gamma.gates, Vertex{v});
      all_connected = all_connected && w.connected();
      all_complete = all_complete && w.complete();
    }
    connected += all_connected;
    if (in.result.blueprint.kind != RealizationCase::MaxOdd) {
      ++complete_expected;
      complete += all_complete;
    }
  }
  const int n = static_cast<int>(all.size());
  std::ostringstream d;
  d << "positive " << positive << "/" << n << ", connected " << connected << "/" << n << ", complete (even/odd) "
    << complete << "/" << complete_expected;
  report("3b", positive == n && connected == n && complete == complete_expected,
         "M(h) positive and gate Whitehead graphs of h connected, complete outside the maximal odd case", d.str());
}

void criterion_max_odd_turns(const std::vector<Instance>& all) {
  int instances = 0;
  std::uint64_t checked = 0;
  std::string first;
  for (const auto& in : all) {
    const Blueprint& bp = in.result.blueprint;
    if (bp.kind != RealizationCase::MaxOdd || bp.loop_count() > 5) continue;
    ++instances;
    const Gamma& gamma = in.result.gamma;
    const Graph& g = *gamma.graph;
    const Edge a1 = gamma.a1();
    const Edge c1 = gamma.edges.c.front();
    const IllegalTurnMap gt = build_g_t(gamma, bp, *in.result.selectors, Turn::of(a1, c1));
    const int n = bp.loop_count() + 1;
    std::vector<EdgeWord> from_a, from_c;
    EdgeWord prefix{a1};
    legal_paths(g, gamma.gates, prefix, n, from_a);
    prefix = {c1};
    legal_paths(g, gamma.gates, prefix, n, from_c);
    for (const auto& p : from_a) {
      for (const auto& q : from_c) {
        ++checked;
        const auto img = long_turn_image(*gt.map.map, LongTurn{gamma.v1(), p, q});
        const bool ok = img && is_legal_path(gamma.gates, img->first) && is_legal_path(gamma.gates, img->second) &&
                        is_legal_turn(gamma.gates, img->starting_turn());
        if (!ok && first.empty()) first = in.list.to_string() + ": " + format_word(g, p) + " | " + format_word(g, q);
      }
    }
  }
  report("3c", first.empty() && instances > 0,
         "maximal odd case: long turns of branch length l+1 at (a1, c1) are g_t-long with legal images",
         std::to_string(instances) + " instances with l <= 5, " + std::to_string(checked) + " long turns" +
             (first.empty() ? "" : "; first failure " + first));
}

void criterion_inverses(const std::vector<Instance>& all) {
  std::size_t factors = 0, verified = 0;
  for (const auto& in : all) {
    const Pi1Marking marking = in.result.marking();
    for (const auto* list : {&in.result.h_prime, &in.result.g_factors}) {
      for (const NamedMap& f : *list) {
        ++factors;
        verified += f.inverse && verify_homotopy_equivalence(*f.map, *f.inverse, marking) &&
                    verify_homotopy_equivalence(*f.inverse, *f.map, marking);
      }
    }
  }
  report("3d", factors == verified, "every factor map has a verified homotopy inverse",
         std::to_string(verified) + "/" + std::to_string(factors) + " factors");
}

void criterion_intrinsic_gates(const std::vector<Instance>& all) {
  int ok = 0;
  std::string first;
  for (const auto& in : all) {
    const bool good = intrinsic_gate_structure(in.result.g()) == in.result.gamma.gates &&
                      intrinsic_gate_structure(in.result.final_map()) == in.result.gamma.gates;
    ok += good;
    if (!good && first.empty()) first = "N=" + std::to_string(in.rank) + " " + in.list.to_string();
  }
  report("3e", ok == static_cast<int>(all.size()), "intrinsic gates of g and of h o g equal the constructed gates",
         std::to_string(ok) + "/" + std::to_string(all.size()) + (first.empty() ? "" : "; first failure " + first));
}

void criterion_matrix_product() {
  std::mt19937 rng(20);
  auto draw = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  int ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g;
    const int vertices = 1 + draw(3);
    for (int v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v));
    for (int v = 1; v < vertices; ++v) g.add_edge("t" + std::to_string(v), Vertex{v - 1}, Vertex{v});
    const int extra = 1 + draw(9 - vertices);
    for (int k = 0; k < extra; ++k) g.add_edge("e" + std::to_string(k), Vertex{draw(vertices)}, Vertex{draw(vertices)});
    auto gp = std::make_shared<const Graph>(g);
    auto random_map = [&] {
      std::vector<EdgeWord> images;
      for (Edge e : gp->positive_edges()) {
        EdgeWord w;
        Vertex at = gp->init(e);
        for (int s = draw(5); s > 0; --s) {
          const auto& out = gp->outgoing(at);
          w.push_back(out[static_cast<std::size_t>(draw(static_cast<int>(out.size())))]);
          at = gp->terminal(w.back());
        }
        const int target = gp->terminal(e).id;
        for (int v = at.id; v < target; ++v) w.push_back(*gp->find_edge("t" + std::to_string(v + 1)));
        for (int v = at.id; v > target; --v) w.push_back(gp->find_edge("t" + std::to_string(v))->reversed());
        images.push_back(w);
      }
      std::vector<Vertex> fixed;
      for (int v = 0; v < vertices; ++v) fixed.push_back(Vertex{v});
      return GraphMap(gp, fixed, images);
    };
    const GraphMap f = random_map();
    const GraphMap h = random_map();
    ok += transition_matrix(compose_maps(f, h)) == transition_matrix(f) * transition_matrix(h);
  }
  report("3f", ok == 200, "M(f o g) = M(f) M(g) on random composable pairs", std::to_string(ok) + "/200 pairs");
}

void criterion_inp(const std::vector<Instance>& all) {
  std::map<RealizationCase, int> per_case;
  int tested = 0, none = 0;
  for (const auto& in : all) {
    auto& n = per_case[in.result.blueprint.kind];
    if (n >= 7 || tested >= 20) continue;
    ++n;
    ++tested;
    none += find_periodic_inps(in.result.final_map(), in.result.gamma.gates).verdict == InpVerdict::NoneFound;
  }
  std::ostringstream d;
  d << none << "/" << tested << " none found; cases";
  for (const auto& [kind, n] : per_case) d << " " << to_string(kind) << "=" << n;
  report("4a", tested == 20 && none == 20 && per_case.size() == 3,
         "bounded INP search finds nothing on realizations from all three cases", d.str());

  auto g = rose({"a", "b"});
  const MapChain fib(rose_map(g, {"a b", "a"}));
  const GateStructure gates = intrinsic_gate_structure(fib);
  const EdgeWord w = parse_word(*g, "a b ~a ~b");
  const auto once = fib.apply(w, 100);
  const auto twice = fib.power(2).apply(w, 100);
  // Hand computation: f(a b ~a ~b) = a b a ~b ~a ~a, cyclically b a ~b ~a; f² returns the class.
  const bool hand = once && twice && tighten_cyclic(*once) == parse_word(*g, "b a ~b ~a") &&
                    cyclically_equal(tighten_cyclic(*twice), w);
  const CyclicPeriodResult period = cyclic_word_period(fib, gates, w, 8);
  const InpSearchResult square = find_periodic_inps(fib.power(2), gates);
  report("4b", hand && period.verdict == CyclicVerdict::Periodic && period.period == 2 &&
                   square.verdict == InpVerdict::Found,
         "Fibonacci rose map: commutator class has period 2 and f^2 carries a periodic INP",
         "cyclic period " + std::to_string(period.period) + ", INP search on f^2 " +
             (square.verdict == InpVerdict::Found ? "found" : "not found"));
}

void criterion_experiment() {
  constexpr int rank = 3, length = 26, samples = 100;
  constexpr std::uint64_t seed = 7;
  ExperimentOptions one;
  one.threads = 1;
  ExperimentOptions many;
  many.threads = 4;
  const FrequencyTable a = run_experiment(rank, length, samples, seed, one);
  const FrequencyTable b = run_experiment(rank, length, samples, seed, many);
  const FrequencyTable c = run_experiment(rank, length, samples, seed);
  const std::string ja = table_to_json(a, false).dump();
  const bool identical = ja == table_to_json(b, false).dump() && ja == table_to_json(c, false).dump();
  bool bounded = true;
  for (const auto& [list, n] : a.counts) bounded = bounded && list.doubled_sum() <= 2 * (rank - 1);
  const bool sums = a.conditional + a.inp_present + a.non_expanding + a.other == samples;
  report("5", identical && bounded && sums, "experiment N=3 L=26 100 samples is reproducible and bounded",
         std::string(identical ? "identical across runs and thread counts" : "tables differ") +
             (bounded ? ", every list has sum <= N-1" : ", a list exceeds N-1"));

  std::cout << "     qualitative comparison with the published row N=3 L=26: 100% fully irreducible, top list [1/2] 64%\n";
  std::istringstream table(format_table(a, 5, false));
  for (std::string line; std::getline(table, line);) std::cout << "     " << line << "\n";
  std::cout << "     positive elementary products mostly collapse to two gates at the vertex, so [] dominates here;\n"
               "     the conditional rate tracks the published fully irreducible rate, the list distribution does not.\n";
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> errors;
  const std::vector<Instance> all = realize_all(3, 6, errors);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  criterion_exhaustive(all, errors, seconds);
  criterion_deficits(all);
  criterion_selectors(all);
  criterion_h(all);
  criterion_max_odd_turns(all);
  criterion_inverses(all);
  criterion_intrinsic_gates(all);
  criterion_matrix_product();
  criterion_inp(all);
  criterion_experiment();

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
