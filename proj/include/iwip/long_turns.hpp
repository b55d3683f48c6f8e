#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iwip/gates.hpp"
#include "iwip/map_chain.hpp"

namespace iwip {

// Pair of legal paths with a common initial vertex and distinct first edges.
// Branches may have different lengths (images of long turns usually do).
struct LongTurn {
  Vertex start;
  EdgeWord first;
  EdgeWord second;

  Turn starting_turn() const { return Turn::of(first.front(), second.front()); }
  friend bool operator==(const LongTurn&, const LongTurn&) = default;
};

// Long turns with both branches of length c, each unordered pair visited
// once (first branch's first edge below the second's). Stops early when the
// visitor returns false.
void for_each_long_turn(const Graph& g, const GateStructure& gates, int c,
                        const std::function<bool(const LongTurn&)>& visit);
std::vector<LongTurn> enumerate_long_turns(const Graph& g, const GateStructure& gates, int c);
// Number of legal paths of length c starting with e, saturating at UINT64_MAX.
std::uint64_t count_legal_paths(const Graph& g, const GateStructure& gates, Edge e, int c);
// |LT_c|, saturating.
std::uint64_t count_long_turns(const Graph& g, const GateStructure& gates, int c);

// Image of a long turn under an explicit map: images tightened as a path
// ~f(first) f(second), i.e. with the common prefix removed. nullopt when one
// image is a prefix of the other (the turn is not f-long).
std::optional<LongTurn> long_turn_image(const GraphMap& f, const LongTurn& lt);

// Tracing a pair of branches through a factored map, one factor at a time,
// removing the common prefix after every factor. Branch images longer than
// `cut` are truncated; a truncated branch is no longer exact.
enum class TraceFate {
  Legal,         // starting turn became legal
  Illegal,       // survived every factor with an illegal starting turn
  NotLong,       // one exact branch cancelled completely
  ExtendFirst,   // the open first branch was exhausted
  ExtendSecond,  // the open second branch was exhausted
  CutTooShort,   // a truncated branch was exhausted
};

struct TraceResult {
  TraceFate fate = TraceFate::Illegal;
  EdgeWord first;
  EdgeWord second;
  bool first_exact = true;
  bool second_exact = true;
  bool first_exhausted = false;
  bool second_exhausted = false;
};

struct TraceInput {
  EdgeWord first;
  EdgeWord second;
  bool first_open = false;   // more edges may follow
  bool second_open = false;
};

TraceResult trace_long_turn(const MapChain& f, const GateStructure& gates, const TraceInput& in,
                            std::size_t cut, bool stop_when_legal);

enum class LegalizingVerdict { Legalizing, NotLegalizing };

struct LegalizingCertificate {
  int c = 0;
  std::uint64_t checked = 0;  // |LT_c|, saturating
  LegalizingVerdict verdict = LegalizingVerdict::NotLegalizing;
  std::optional<LongTurn> witness;
  bool witness_not_long = false;
  std::optional<Turn> witness_image_turn;  // starting turn of the illegal image
  std::uint64_t nodes = 0;                 // search nodes visited
  std::string note;

  bool ok() const { return verdict == LegalizingVerdict::Legalizing; }
};

struct LegalizingOptions {
  std::size_t initial_cut = 64;
  std::size_t max_cut = std::size_t{1} << 22;
};

// Decides whether every long turn of branch length c is f-long with a legal
// image. Long turns with a legal starting turn reduce to the turn-level
// condition; the rest are explored as a tree of branch prefixes, refined only
// where the traced image depends on further edges. f must be a train track
// morphism for `gates`. Throws MapError when cancellation exceeds max_cut.
LegalizingCertificate verify_legalizing(const MapChain& f, const GateStructure& gates, int c,
                                        const LegalizingOptions& options = {});

}  // namespace iwip
