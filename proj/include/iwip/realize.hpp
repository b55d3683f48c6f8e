#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iwip/gates.hpp"
#include "iwip/index_list.hpp"
#include "iwip/long_turns.hpp"
#include "iwip/map_chain.hpp"
#include "iwip/marking.hpp"

namespace iwip {

enum class RealizationCase { Even, Odd, MaxOdd };
std::string to_string(RealizationCase c);
RealizationCase parse_realization_case(std::string_view text);

struct Blueprint {
  int rank = 0;
  std::vector<int> entries;  // doubled j_k in vertex order v1..vℓ
  RealizationCase kind = RealizationCase::Even;
  std::vector<int> gate_counts;  // i_k = 2 j_k + 2
  int r = 0;                     // b-edges
  int s = 0;                     // a-loops
  bool has_d = false;
  std::vector<std::pair<int, int>> germ_pairs;  // vertex indices of b_i's endpoints
  std::string s_formula;

  int loop_count() const { return static_cast<int>(entries.size()); }
  // Branch length at which g_t legalizes its turn: 1, or ℓ+1 in the maximal odd case.
  int legalizing_length() const { return kind == RealizationCase::MaxOdd ? loop_count() + 1 : 1; }
  IndexList index_list() const { return IndexList(entries); }
};

// Throws InputError unless rank >= 3, the list is non-empty and 1/2 <= Σ <= N - 3/2.
Blueprint validate_and_classify(int rank, std::vector<int> doubled_entries);

struct GammaEdges {
  std::vector<Edge> c;
  std::vector<Edge> b;
  std::vector<Edge> a;
  std::optional<Edge> d;
};

// The graph Γ with its gate structure 𝐆.
struct Gamma {
  std::shared_ptr<const Graph> graph;
  GateStructure gates;
  GammaEdges edges;
  int g1 = 0;  // gate of c1
  int g2 = 0;  // gate of ~cℓ

  Vertex v1() const { return Vertex{0}; }
  Edge a1() const { return edges.a.front(); }
  // c_from..c_to (1-based, inclusive); empty when from > to.
  EdgeWord circle(int from, int to) const;
};

Gamma build_graph(const Blueprint& bp);

struct LoopSelector {
  Edge edge;
  EdgeWord u;
  EdgeWord u_prime;
  EdgeWord loop() const;
};

struct GateTurnSelector {
  int gate_a = 0;
  int gate_b = 0;
  EdgeWord v;
};

struct PathSelectors {
  std::vector<LoopSelector> loops;            // every positive e ≠ a1, canonical order
  std::vector<GateTurnSelector> gate_turns;   // eligible gate turns, sorted by gate ids
  EdgeWord beta;                              // even and odd cases
  EdgeWord beta_prime;

  const LoopSelector& loop_for(Edge e) const;
};

// α for e ∈ 𝔤1 and α′ for ē ∈ 𝔤2 (both possibly trivial).
EdgeWord alpha_for(const Gamma& gamma, Edge e);
EdgeWord alpha_prime_for(const Gamma& gamma, Edge e);

// Clause predicates of the path selection lemma; empty string when satisfied.
std::string check_loop_selector(const Gamma& gamma, const LoopSelector& sel);
std::string check_gate_turn_selector(const Gamma& gamma, const GateTurnSelector& sel);
std::string check_alpha_beta(const Gamma& gamma, Edge e, const EdgeWord& alpha, const EdgeWord& beta);
std::string check_alpha_beta_prime(const Gamma& gamma, Edge e, const EdgeWord& alpha_prime,
                                   const EdgeWord& beta_prime);
// All clause checks for all selections; empty when everything holds.
std::vector<std::string> check_selectors(const Gamma& gamma, const Blueprint& bp, const PathSelectors& sel);

// Throws std::logic_error when a selection fails its predicates.
PathSelectors select_paths(const Gamma& gamma, const Blueprint& bp);

// A factor map with its explicit homotopy inverse.
struct NamedMap {
  std::string name;
  std::shared_ptr<const GraphMap> map;
  std::shared_ptr<const GraphMap> inverse;
};

NamedMap build_h_e(const Gamma& gamma, const PathSelectors& sel, Edge e);
NamedMap build_h_t(const Gamma& gamma, const GateTurnSelector& t);

struct HMap {
  std::vector<NamedMap> prime_factors;  // h′ = product, outermost first
  MapChain h;                           // h′ ∘ h′
};

HMap build_h(const Gamma& gamma, const PathSelectors& sel);

struct IllegalTurnMap {
  Turn turn;
  NamedMap map;
};

// Throws std::invalid_argument when t is not one of the illegal turns of 𝐆.
IllegalTurnMap build_g_t(const Gamma& gamma, const Blueprint& bp, const PathSelectors& sel, Turn t);
std::vector<IllegalTurnMap> build_all_g_t(const Gamma& gamma, const Blueprint& bp, const PathSelectors& sel);

struct LegalizingSearchOptions {
  int c_max = 0;  // 0: 64·L
  int max_rounds = 32;
};

struct LegalizingMap {
  std::vector<NamedMap> factors;  // outermost first
  MapChain g;
  LegalizingCertificate certificate;
  int rounds = 0;
  std::vector<std::string> trace;
};

class LegalizingSearchError : public std::runtime_error {
 public:
  LegalizingSearchError(const std::string& what, std::vector<std::string> trace)
      : std::runtime_error(what), trace(std::move(trace)) {}
  std::vector<std::string> trace;
};

// Seeds g with every g_t in canonical order and prepends g_s whenever a
// witness long turn has an illegal image with starting turn s, doubling C
// when a witness is not g-long.
LegalizingMap build_legalizing_g(const Gamma& gamma, const Blueprint& bp, const std::vector<IllegalTurnMap>& g_ts,
                                 const LegalizingSearchOptions& options = {});

struct RealizationResult {
  Blueprint blueprint;
  Gamma gamma;
  std::optional<PathSelectors> selectors;  // absent when read back from JSON
  std::vector<NamedMap> h_prime;
  std::vector<NamedMap> g_factors;  // outermost first
  LegalizingCertificate legalizing;
  std::vector<std::string> notes;

  MapChain h() const;
  MapChain g() const;
  MapChain final_map() const;  // h ∘ g
  Pi1Marking marking() const { return Pi1Marking(gamma.graph); }
};

RealizationResult realize(int rank, const std::vector<int>& doubled_entries,
                          const LegalizingSearchOptions& options = {});

}  // namespace iwip
