#include "iwip/realize.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "iwip/traintrack.hpp"

namespace iwip {

std::string to_string(RealizationCase c) {
  switch (c) {
    case RealizationCase::Even: return "even";
    case RealizationCase::Odd: return "odd";
    case RealizationCase::MaxOdd: return "max_odd";
  }
  return "?";
}

RealizationCase parse_realization_case(std::string_view text) {
  if (text == "even") return RealizationCase::Even;
  if (text == "odd") return RealizationCase::Odd;
  if (text == "max_odd") return RealizationCase::MaxOdd;
  throw InputError("unknown realization case: " + std::string(text));
}

Blueprint validate_and_classify(int rank, std::vector<int> doubled_entries) {
  if (rank < 3) throw InputError("rank must be at least 3");
  if (doubled_entries.empty()) throw InputError("index list must not be empty");
  for (int d : doubled_entries)
    if (d <= 0) throw InputError("index entries must be positive");
  const int sum = std::accumulate(doubled_entries.begin(), doubled_entries.end(), 0);
  if (sum > 2 * rank - 3)
    throw InputError("index sum " + format_half(sum) + " exceeds N - 3/2 = " + format_half(2 * rank - 3));

  Blueprint bp;
  bp.rank = rank;
  bp.entries = std::move(doubled_entries);
  if (sum % 2 == 0)
    bp.kind = RealizationCase::Even;
  else if (sum == 2 * rank - 3)
    bp.kind = RealizationCase::MaxOdd;
  else
    bp.kind = RealizationCase::Odd;
  for (int d : bp.entries) bp.gate_counts.push_back(d + 2);
  bp.r = sum / 2;
  switch (bp.kind) {
    case RealizationCase::Even:
      bp.s = rank - bp.r - 1;
      bp.s_formula = "s = N - r - 1";
      break;
    case RealizationCase::Odd:
      bp.s = rank - bp.r - 2;
      bp.s_formula = "s = N - r - 2: the d-loop adds one to the rank, so s = N - r - 1 would give rank N + 1";
      break;
    case RealizationCase::MaxOdd:
      bp.s = 1;
      bp.s_formula = "s = 1";
      break;
  }
  bp.has_d = bp.kind == RealizationCase::Odd;

  std::vector<int> germs;
  for (std::size_t k = 0; k < bp.entries.size(); ++k)
    germs.insert(germs.end(), static_cast<std::size_t>(bp.entries[k]), static_cast<int>(k));
  if (bp.kind != RealizationCase::Even) {
    const auto last_at_v1 = std::find(germs.rbegin(), germs.rend(), 0);
    germs.erase(std::next(last_at_v1).base());
  }
  for (std::size_t i = 0; i + 1 < germs.size(); i += 2) bp.germ_pairs.emplace_back(germs[i], germs[i + 1]);
  return bp;
}

EdgeWord Gamma::circle(int from, int to) const {
  EdgeWord out;
  for (int k = from; k <= to; ++k) out.push_back(edges.c.at(static_cast<std::size_t>(k - 1)));
  return out;
}

Gamma build_graph(const Blueprint& bp) {
  auto graph = std::make_shared<Graph>();
  const int l = bp.loop_count();
  for (int k = 1; k <= l; ++k) graph->add_vertex("v" + std::to_string(k));
  Gamma gamma;
  for (int k = 0; k < l; ++k)
    gamma.edges.c.push_back(graph->add_edge("c" + std::to_string(k + 1), Vertex{k}, Vertex{(k + 1) % l}));
  for (std::size_t i = 0; i < bp.germ_pairs.size(); ++i)
    gamma.edges.b.push_back(graph->add_edge("b" + std::to_string(i + 1), Vertex{bp.germ_pairs[i].first},
                                            Vertex{bp.germ_pairs[i].second}));
  for (int i = 0; i < bp.s; ++i) gamma.edges.a.push_back(graph->add_edge("a" + std::to_string(i + 1), Vertex{0}, Vertex{0}));
  if (bp.has_d) gamma.edges.d = graph->add_edge("d", Vertex{0}, Vertex{0});

  std::vector<int> label(static_cast<std::size_t>(graph->directed_count()));
  std::iota(label.begin(), label.end(), 0);
  const auto merge = [&](const std::vector<Edge>& members) {
    for (Edge e : members) label[static_cast<std::size_t>(e.id)] = members.front().id;
  };
  const Edge c1 = gamma.edges.c.front();
  const Edge cl_bar = gamma.edges.c.back().reversed();
  if (bp.kind == RealizationCase::MaxOdd) {
    merge({c1, gamma.edges.a.front()});
  } else {
    std::vector<Edge> g1{c1};
    std::vector<Edge> g2{cl_bar};
    for (Edge a : gamma.edges.a) {
      g1.push_back(a);
      g2.push_back(a.reversed());
    }
    merge(g1);
    merge(g2);
    if (gamma.edges.d) merge({*gamma.edges.d, gamma.edges.d->reversed()});
  }
  gamma.gates = GateStructure::from_labels(*graph, label);
  gamma.g1 = gamma.gates.gate_of(c1);
  gamma.g2 = gamma.gates.gate_of(cl_bar);

  if (graph->rank() != bp.rank) throw std::logic_error("constructed graph has the wrong rank");
  for (int k = 0; k < l; ++k)
    if (gamma.gates.gate_count_at(Vertex{k}) != bp.gate_counts[static_cast<std::size_t>(k)])
      throw std::logic_error("constructed gate count differs at v" + std::to_string(k + 1));
  gamma.graph = std::move(graph);
  return gamma;
}

EdgeWord LoopSelector::loop() const {
  EdgeWord out = u;
  out.push_back(edge);
  out.insert(out.end(), u_prime.begin(), u_prime.end());
  return out;
}

const LoopSelector& PathSelectors::loop_for(Edge e) const {
  for (const auto& l : loops)
    if (l.edge == e) return l;
  throw std::out_of_range("no loop selector for edge");
}

EdgeWord alpha_for(const Gamma& gamma, Edge e) {
  const int l = static_cast<int>(gamma.edges.c.size());
  return e == gamma.edges.c.front() && l > 1 ? gamma.circle(2, l) : EdgeWord{};
}

EdgeWord alpha_prime_for(const Gamma& gamma, Edge e) {
  const int l = static_cast<int>(gamma.edges.c.size());
  return e == gamma.edges.c.back() && l > 1 ? gamma.circle(1, l - 1) : EdgeWord{};
}

namespace {

bool avoids(std::span<const Edge> w, const std::vector<Edge>& positives) {
  return std::none_of(w.begin(), w.end(), [&](Edge x) {
    return std::find(positives.begin(), positives.end(), x.as_positive()) != positives.end();
  });
}

bool is_loop_at(const Graph& g, std::span<const Edge> w, Vertex v) {
  return !w.empty() && is_path(g, Path{v, EdgeWord(w.begin(), w.end())}) && g.terminal(w.back()) == v;
}

bool crosses_gate_turn(const GateStructure& gates, std::span<const Edge> w, int a, int b) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    const int x = gates.gate_of(w[i - 1].reversed());
    const int y = gates.gate_of(w[i]);
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

std::string loop_shape_error(const Gamma& gamma, std::span<const Edge> loop) {
  const Graph& g = *gamma.graph;
  if (!is_loop_at(g, loop, gamma.v1())) return "not a loop at v1";
  if (!is_legal_path(gamma.gates, loop)) return "not legal";
  if (gamma.gates.gate_of(loop.front()) != gamma.g1) return "does not start in the gate of c1";
  if (gamma.gates.gate_of(loop.back().reversed()) == gamma.g1) return "ends in the gate of c1";
  if (!avoids(loop, {gamma.a1()})) return "passes through a1";
  return {};
}

std::vector<Edge> a_edges_and(const Gamma& gamma, Edge e) {
  std::vector<Edge> out = gamma.edges.a;
  out.push_back(e.as_positive());
  return out;
}

// Shortest legal loop at v1 starting in 𝔤1 and not ending in 𝔤1, found by
// breadth-first search over (vertex, last edge, phase); `advance` returns the
// next phase or -1 when the step is not allowed. The loop must end in phase 1.
EdgeWord search_loop(const Gamma& gamma, const std::set<Edge>& forbidden,
                     const std::function<int(std::optional<Edge>, Edge, int)>& advance) {
  const Graph& g = *gamma.graph;
  std::vector<std::vector<Edge>> out(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    out[static_cast<std::size_t>(v)] = g.outgoing(Vertex{v});
    std::sort(out[static_cast<std::size_t>(v)].begin(), out[static_cast<std::size_t>(v)].end(),
              [&](Edge a, Edge b) { return g.token(a) < g.token(b); });
  }
  using State = std::tuple<int, int, int>;  // vertex, last edge id (-1 at start), phase
  std::map<State, std::pair<State, Edge>> parent;
  const State start{gamma.v1().id, -1, 0};
  std::deque<State> queue{start};
  while (!queue.empty()) {
    const State st = queue.front();
    queue.pop_front();
    const auto [v, last_id, phase] = st;
    for (Edge x : out[static_cast<std::size_t>(v)]) {
      if (forbidden.count(x)) continue;
      std::optional<Edge> last;
      if (last_id < 0) {
        if (gamma.gates.gate_of(x) != gamma.g1) continue;
      } else {
        last = Edge{last_id};
        if (gamma.gates.same_gate(last->reversed(), x)) continue;
      }
      const int next_phase = advance(last, x, phase);
      if (next_phase < 0) continue;
      const State ns{g.terminal(x).id, x.id, next_phase};
      if (ns == start || parent.count(ns)) continue;
      parent.emplace(ns, std::make_pair(st, x));
      if (next_phase == 1 && g.terminal(x) == gamma.v1() && gamma.gates.gate_of(x.reversed()) != gamma.g1) {
        EdgeWord path;
        for (State cur = ns; cur != start;) {
          const auto& [prev, edge] = parent.at(cur);
          path.push_back(edge);
          cur = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(ns);
    }
  }
  return {};
}

std::string gate_name(const Gamma& gamma, int gate) {
  return gamma.graph->token(gamma.gates.members(gate).front());
}

}  // namespace

std::string check_loop_selector(const Gamma& gamma, const LoopSelector& sel) {
  const EdgeWord loop = sel.loop();
  if (auto err = loop_shape_error(gamma, loop); !err.empty()) return err;
  const auto through = std::count_if(loop.begin(), loop.end(), [&](Edge x) { return x.as_positive() == sel.edge.as_positive(); });
  const auto forward = std::count(loop.begin(), loop.end(), sel.edge);
  if (through != 1 || forward != 1) return "does not pass exactly once through " + gamma.graph->token(sel.edge);
  return {};
}

std::string check_gate_turn_selector(const Gamma& gamma, const GateTurnSelector& sel) {
  if (auto err = loop_shape_error(gamma, sel.v); !err.empty()) return err;
  if (!crosses_gate_turn(gamma.gates, sel.v, sel.gate_a, sel.gate_b)) return "does not cross its gate turn";
  return {};
}

std::string check_alpha_beta(const Gamma& gamma, Edge e, const EdgeWord& alpha, const EdgeWord& beta) {
  const auto& gates = gamma.gates;
  const auto avoid = a_edges_and(gamma, e);
  if (!avoids(alpha, avoid) || !avoids(beta, avoid)) return "alpha or beta passes through an a-edge or e";
  EdgeWord e_alpha{e};
  e_alpha.insert(e_alpha.end(), alpha.begin(), alpha.end());
  if (!is_path(*gamma.graph, Path{gamma.graph->init(e), e_alpha}) || !is_legal_path(gates, e_alpha))
    return "e alpha is not a legal path";
  if (gates.gate_of(e_alpha.back().reversed()) != gamma.g2) return "e alpha does not end in the gate of ~cl";
  if (!is_loop_at(*gamma.graph, beta, gamma.v1()) || !is_legal_path(gates, beta)) return "beta is not a legal loop at v1";
  const int first = gates.gate_of(beta.front());
  if (first == gamma.g1 || first == gamma.g2) return "beta starts in the gate of c1 or ~cl";
  if (gates.gate_of(beta.back().reversed()) == gamma.g1) return "beta ends in the gate of c1";
  return {};
}

std::string check_alpha_beta_prime(const Gamma& gamma, Edge e, const EdgeWord& alpha_prime,
                                   const EdgeWord& beta_prime) {
  const auto& gates = gamma.gates;
  const auto avoid = a_edges_and(gamma, e);
  if (!avoids(alpha_prime, avoid) || !avoids(beta_prime, avoid)) return "alpha' or beta' passes through an a-edge or e";
  EdgeWord alpha_e = alpha_prime;
  alpha_e.push_back(e);
  const Vertex start = alpha_prime.empty() ? gamma.graph->init(e) : gamma.graph->init(alpha_prime.front());
  if (!is_path(*gamma.graph, Path{start, alpha_e}) || !is_legal_path(gates, alpha_e)) return "alpha' e is not legal";
  if (gates.gate_of(alpha_e.front()) != gamma.g1) return "alpha' e does not start in the gate of c1";
  if (!is_loop_at(*gamma.graph, beta_prime, gamma.v1()) || !is_legal_path(gates, beta_prime))
    return "beta' is not a legal loop at v1";
  if (gates.gate_of(beta_prime.front()) == gamma.g2) return "beta' starts in the gate of ~cl";
  const int last = gates.gate_of(beta_prime.back().reversed());
  if (last == gamma.g1 || last == gamma.g2) return "beta' ends in the gate of c1 or ~cl";
  return {};
}

namespace {

std::vector<std::pair<int, int>> eligible_gate_turns(const Gamma& gamma, const Blueprint& bp) {
  const Graph& g = *gamma.graph;
  const int excluded =
      bp.kind == RealizationCase::MaxOdd ? gamma.gates.gate_of(gamma.a1().reversed()) : -1;
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto gs = gamma.gates.gates_at(Vertex{v});
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j)
        if (gs[i] != excluded && gs[j] != excluded) out.emplace_back(gs[i], gs[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> gate_edges_positive(const Gamma& gamma, int gate) {
  std::vector<Edge> out;
  for (Edge e : gamma.gates.members(gate)) out.push_back(e.as_positive());
  return out;
}

}  // namespace

std::vector<std::string> check_selectors(const Gamma& gamma, const Blueprint& bp, const PathSelectors& sel) {
  std::vector<std::string> errors;
  const Graph& g = *gamma.graph;
  for (Edge e : g.positive_edges()) {
    if (e == gamma.a1()) continue;
    const auto it = std::find_if(sel.loops.begin(), sel.loops.end(), [&](const LoopSelector& l) { return l.edge == e; });
    if (it == sel.loops.end()) {
      errors.push_back("no loop selector for " + g.token(e));
      continue;
    }
    if (auto err = check_loop_selector(gamma, *it); !err.empty()) errors.push_back("loop " + g.token(e) + ": " + err);
  }
  for (const auto& [a, b] : eligible_gate_turns(gamma, bp)) {
    const auto it = std::find_if(sel.gate_turns.begin(), sel.gate_turns.end(),
                                 [&](const GateTurnSelector& t) { return t.gate_a == a && t.gate_b == b; });
    const std::string name = "(" + gate_name(gamma, a) + "|" + gate_name(gamma, b) + ")";
    if (it == sel.gate_turns.end()) {
      errors.push_back("no selector for gate turn " + name);
      continue;
    }
    if (auto err = check_gate_turn_selector(gamma, *it); !err.empty()) errors.push_back("gate turn " + name + ": " + err);
  }
  if (bp.kind != RealizationCase::MaxOdd) {
    for (Edge e : gate_edges_positive(gamma, gamma.g1))
      if (auto err = check_alpha_beta(gamma, e, alpha_for(gamma, e), sel.beta); !err.empty())
        errors.push_back("alpha/beta for " + g.token(e) + ": " + err);
    for (Edge e : gate_edges_positive(gamma, gamma.g2))
      if (auto err = check_alpha_beta_prime(gamma, e, alpha_prime_for(gamma, e), sel.beta_prime); !err.empty())
        errors.push_back("alpha'/beta' for " + g.token(e) + ": " + err);
  }
  return errors;
}

PathSelectors select_paths(const Gamma& gamma, const Blueprint& bp) {
  const Graph& g = *gamma.graph;
  const Edge a1 = gamma.a1();
  PathSelectors sel;
  for (Edge e : g.positive_edges()) {
    if (e == a1) continue;
    const EdgeWord loop = search_loop(gamma, {a1, a1.reversed(), e.reversed()},
                                      [e](std::optional<Edge>, Edge x, int phase) {
                                        if (x != e) return phase;
                                        return phase == 1 ? -1 : 1;
                                      });
    const auto at = std::find(loop.begin(), loop.end(), e);
    if (at == loop.end()) throw std::logic_error("no loop through " + g.token(e));
    sel.loops.push_back(LoopSelector{e, EdgeWord(loop.begin(), at), EdgeWord(at + 1, loop.end())});
  }
  for (const auto& [a, b] : eligible_gate_turns(gamma, bp)) {
    const auto& gates = gamma.gates;
    const EdgeWord v = search_loop(gamma, {a1, a1.reversed()}, [&](std::optional<Edge> last, Edge x, int phase) {
      if (phase == 1 || !last) return phase;
      const int p = gates.gate_of(last->reversed());
      const int q = gates.gate_of(x);
      return (p == a && q == b) || (p == b && q == a) ? 1 : 0;
    });
    sel.gate_turns.push_back(GateTurnSelector{a, b, v});
  }
  if (bp.kind == RealizationCase::Odd) {
    sel.beta = {*gamma.edges.d};
    sel.beta_prime = {*gamma.edges.d};
  } else if (bp.kind == RealizationCase::Even) {
    std::optional<Edge> bk;
    for (Edge b : gamma.edges.b) {
      if (g.init(b) == gamma.v1()) bk = b;
      else if (g.terminal(b) == gamma.v1()) bk = b.reversed();
      if (bk) break;
    }
    if (!bk) throw std::logic_error("no b-edge at v1 in the even case");
    const int kp = g.terminal(*bk).id;  // v_{k'} with k' = kp + 1
    const int l = static_cast<int>(gamma.edges.c.size());
    sel.beta = {*bk};
    if (kp != 0) {
      const auto tail = gamma.circle(kp + 1, l);
      sel.beta.insert(sel.beta.end(), tail.begin(), tail.end());
      sel.beta_prime = gamma.circle(1, kp);
    }
    sel.beta_prime.push_back(bk->reversed());
  }
  const auto errors = check_selectors(gamma, bp, sel);
  if (!errors.empty()) throw std::logic_error("path selection failed: " + errors.front());
  return sel;
}

namespace {

EdgeWord cat(std::initializer_list<EdgeWord> parts) {
  EdgeWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

EdgeWord one(Edge e) { return EdgeWord{e}; }
EdgeWord bar(const EdgeWord& w) { return reversed(w); }

NamedMap named(const Gamma& gamma, std::string name, const std::vector<std::pair<Edge, EdgeWord>>& images,
               const std::vector<std::pair<Edge, EdgeWord>>& inverse_images) {
  return NamedMap{std::move(name),
                  std::make_shared<const GraphMap>(GraphMap::with_overrides(gamma.graph, images)),
                  std::make_shared<const GraphMap>(GraphMap::with_overrides(gamma.graph, inverse_images))};
}

}  // namespace

NamedMap build_h_e(const Gamma& gamma, const PathSelectors& sel, Edge e) {
  if (e == gamma.a1()) throw std::invalid_argument("h_e is not defined for a1");
  const LoopSelector& l = sel.loop_for(e);
  const Edge a1 = gamma.a1();
  const EdgeWord& u = l.u;
  const EdgeWord& up = l.u_prime;
  return named(gamma, "h_" + gamma.graph->token(e),
               {{a1, cat({u, one(e), up, one(a1)})}, {e, cat({one(e), up, one(a1), u, one(e)})}},
               {{a1, cat({bar(up), one(e.reversed()), bar(u), one(a1), one(a1)})},
                {e, cat({bar(u), one(a1.reversed()), u, one(e)})}});
}

NamedMap build_h_t(const Gamma& gamma, const GateTurnSelector& t) {
  const Edge a1 = gamma.a1();
  return named(gamma, "h_t(" + gate_name(gamma, t.gate_a) + "|" + gate_name(gamma, t.gate_b) + ")",
               {{a1, cat({t.v, one(a1)})}}, {{a1, cat({bar(t.v), one(a1)})}});
}

HMap build_h(const Gamma& gamma, const PathSelectors& sel) {
  HMap out;
  for (const auto& l : sel.loops) out.prime_factors.push_back(build_h_e(gamma, sel, l.edge));
  for (const auto& t : sel.gate_turns) out.prime_factors.push_back(build_h_t(gamma, t));
  std::vector<std::shared_ptr<const GraphMap>> factors;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& f : out.prime_factors) factors.push_back(f.map);
  out.h = MapChain(gamma.graph, std::move(factors));
  return out;
}

IllegalTurnMap build_g_t(const Gamma& gamma, const Blueprint& bp, const PathSelectors& sel, Turn t) {
  const Graph& g = *gamma.graph;
  const auto& gates = gamma.gates;
  if (t.degenerate() || !gates.same_gate(t.first, t.second))
    throw std::invalid_argument("not an illegal turn of the gate structure");
  const std::string name = "g_t(" + g.token(t.first) + "," + g.token(t.second) + ")";
  const auto& a = gamma.edges.a;
  const auto is_a = [&](Edge x) { return std::find(a.begin(), a.end(), x.as_positive()) != a.end(); };
  const int l = static_cast<int>(gamma.edges.c.size());
  const EdgeWord all_c = gamma.circle(1, l);

  if (bp.kind == RealizationCase::MaxOdd) {
    const Edge a1 = gamma.a1();
    const Edge c1 = gamma.edges.c.front();
    if (t != Turn::of(a1, c1)) throw std::invalid_argument("unexpected illegal turn " + name);
    const Edge b1 = gamma.edges.b.front();
    const int k = g.init(b1).id;
    const int kp = g.terminal(b1).id;
    const EdgeWord c_1k = k == 0 ? all_c : gamma.circle(1, k);
    const EdgeWord c_kl = kp == 0 ? EdgeWord{} : gamma.circle(kp + 1, l);
    const EdgeWord a1_a1 = {a1, a1};
    return {t, named(gamma, name,
                     {{a1, cat({all_c, c_1k, one(b1), c_kl, one(a1)})},
                      {c1, cat({all_c, c_1k, one(b1), c_kl, one(a1), one(c1)})},
                      {b1, cat({one(b1), c_kl, one(a1), c_1k, one(b1)})}},
                     {{a1, cat({bar(c_kl), one(b1.reversed()), bar(c_1k), one(a1), bar(all_c), a1_a1, bar(all_c), a1_a1})},
                      {c1, cat({one(a1.reversed()), one(c1)})},
                      {b1, cat({bar(c_1k), one(a1.reversed()), all_c, one(a1.reversed()), c_1k, one(b1)})}})};
  }

  if (gamma.edges.d && t == Turn::of(*gamma.edges.d, gamma.edges.d->reversed())) {
    const Edge a1 = gamma.a1();
    const Edge d = *gamma.edges.d;
    return {t, named(gamma, name, {{a1, cat({one(a1), one(d.reversed()), all_c})}, {d, {d, a1, d.reversed()}}},
                     {{a1, cat({one(a1), bar(all_c), one(d), all_c, one(a1.reversed())})},
                      {d, cat({one(d), all_c, one(a1.reversed())})}})};
  }

  const int gate = gates.gate_of(t.first);
  if (gate != gamma.g1 && gate != gamma.g2) throw std::invalid_argument("unexpected illegal turn " + name);
  // Both edges positive (𝔤1) or both reversed (𝔤2); pick a_i with the
  // smaller index when both are a-edges, and e for the other edge.
  Edge x = t.first.as_positive();
  Edge y = t.second.as_positive();
  if (!is_a(x)) std::swap(x, y);
  if (is_a(y) && y < x) std::swap(x, y);
  if (!is_a(x)) throw std::invalid_argument("unexpected illegal turn " + name);
  const Edge ai = x;
  const Edge e = y;

  if (gate == gamma.g1) {
    const EdgeWord alpha = alpha_for(gamma, e);
    const EdgeWord& beta = sel.beta;
    return {t, named(gamma, name,
                     {{ai, cat({one(ai), one(e), alpha})}, {e, cat({one(ai), beta, one(ai), one(e)})}},
                     {{ai, cat({one(e), alpha, one(ai.reversed()), bar(beta)})},
                      {e, cat({beta, one(ai), bar(alpha), one(e.reversed()), one(ai), bar(alpha)})}})};
  }
  const EdgeWord alpha = alpha_prime_for(gamma, e);
  const EdgeWord& beta = sel.beta_prime;
  return {t, named(gamma, name,
                   {{ai, cat({alpha, one(e), one(ai)})}, {e, cat({one(e), one(ai), beta, one(ai)})}},
                   {{ai, cat({bar(beta), one(ai.reversed()), alpha, one(e)})},
                    {e, cat({bar(alpha), one(ai), one(e.reversed()), bar(alpha), one(ai), beta})}})};
}

std::vector<IllegalTurnMap> build_all_g_t(const Gamma& gamma, const Blueprint& bp, const PathSelectors& sel) {
  std::vector<IllegalTurnMap> out;
  for (const Turn& t : illegal_turns(*gamma.graph, gamma.gates)) out.push_back(build_g_t(gamma, bp, sel, t));
  return out;
}

LegalizingMap build_legalizing_g(const Gamma& gamma, const Blueprint& bp, const std::vector<IllegalTurnMap>& g_ts,
                                 const LegalizingSearchOptions& options) {
  const Graph& g = *gamma.graph;
  const int base = bp.legalizing_length();
  const int c_max = options.c_max > 0 ? options.c_max : 64 * base;
  LegalizingMap out;
  for (const auto& gt : g_ts) out.factors.push_back(gt.map);
  int c = base;
  while (true) {
    std::vector<std::shared_ptr<const GraphMap>> maps;
    for (const auto& f : out.factors) maps.push_back(f.map);
    out.g = MapChain(gamma.graph, std::move(maps));
    out.certificate = verify_legalizing(out.g, gamma.gates, c);
    std::string line = "C=" + std::to_string(c) + ", " + std::to_string(out.factors.size()) + " factors: ";
    if (out.certificate.ok()) {
      out.trace.push_back(line + "legalizing");
      return out;
    }
    const LongTurn& w = *out.certificate.witness;
    line += "witness (" + format_word(g, w.first) + " | " + format_word(g, w.second) + ")";
    if (out.certificate.witness_not_long || !out.certificate.witness_image_turn) {
      out.trace.push_back(line + " not long");
      c *= 2;
      if (c > c_max) throw LegalizingSearchError("legalizing constant exceeds C_max", out.trace);
      continue;
    }
    const Turn s = *out.certificate.witness_image_turn;
    const auto it = std::find_if(g_ts.begin(), g_ts.end(), [&](const IllegalTurnMap& m) { return m.turn == s; });
    if (it == g_ts.end()) throw LegalizingSearchError("illegal image turn without a g_t factor", out.trace);
    out.trace.push_back(line + " image starts with (" + g.token(s.first) + ", " + g.token(s.second) + "), prepend " +
                        it->map.name);
    out.factors.insert(out.factors.begin(), it->map);
    if (++out.rounds > options.max_rounds) throw LegalizingSearchError("too many legalizing rounds", out.trace);
  }
}

MapChain RealizationResult::h() const {
  std::vector<std::shared_ptr<const GraphMap>> factors;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& f : h_prime) factors.push_back(f.map);
  return MapChain(gamma.graph, std::move(factors));
}

MapChain RealizationResult::g() const {
  std::vector<std::shared_ptr<const GraphMap>> factors;
  for (const auto& f : g_factors) factors.push_back(f.map);
  return MapChain(gamma.graph, std::move(factors));
}

MapChain RealizationResult::final_map() const { return compose(h(), g()); }

RealizationResult realize(int rank, const std::vector<int>& doubled_entries, const LegalizingSearchOptions& options) {
  RealizationResult result;
  result.blueprint = validate_and_classify(rank, doubled_entries);
  result.gamma = build_graph(result.blueprint);
  result.selectors = select_paths(result.gamma, result.blueprint);
  HMap h = build_h(result.gamma, *result.selectors);
  result.h_prime = std::move(h.prime_factors);
  const auto g_ts = build_all_g_t(result.gamma, result.blueprint, *result.selectors);
  LegalizingMap g = build_legalizing_g(result.gamma, result.blueprint, g_ts, options);
  result.g_factors = std::move(g.factors);
  result.legalizing = g.certificate;
  result.notes.push_back(to_string(result.blueprint.kind) + " case; " + result.blueprint.s_formula);
  result.notes.push_back("g is a product of " + std::to_string(result.g_factors.size()) +
                         " illegal-turn maps, legalizing at C = " + std::to_string(result.legalizing.c) + " after " +
                         std::to_string(g.rounds) + " prepend rounds");
  return result;
}

}  // namespace iwip
