#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwip/long_turns.hpp"

namespace iwip {

struct InpOptions {
  int period_bound = 8;
  int length_bound = 200;
  std::uint64_t node_budget = 2'000'000;
  std::size_t max_cut = std::size_t{1} << 22;
};

enum class InpVerdict { NoneFound, Found, Inconclusive };

// Path ~first · second with first, second legal, crossing one illegal turn,
// and f^period(~first · second) ≃ ~first · second rel endpoints.
struct Inp {
  Turn turn;
  int period = 0;
  EdgeWord first;
  EdgeWord second;
  bool verified_by_expansion = false;
};

struct InpSearchResult {
  int period_bound = 0;
  int length_bound = 0;
  InpVerdict verdict = InpVerdict::NoneFound;
  std::vector<Inp> found;
  std::uint64_t nodes = 0;
  std::string note;
};

// Searches every illegal turn and every power p <= period_bound for periodic
// indivisible Nielsen paths with vertex endpoints and branches of at most
// length_bound edges. Requires f to be a train track morphism for `gates`
// with |f(e)| >= 2 for every edge; throws MapError otherwise.
InpSearchResult find_periodic_inps(const MapChain& f, const GateStructure& gates, const InpOptions& options = {});

enum class CyclicVerdict { Periodic, NotPeriodic, Inconclusive };

struct CyclicPeriodResult {
  CyclicVerdict verdict = CyclicVerdict::Inconclusive;
  int period = 0;
};

// Least t <= max_power with f^t(w) cyclically equal to w after cyclic
// tightening. Words are tightened after every factor; once a word is
// cyclically legal and longer than w it can never return, which decides long
// images without expanding them. Inconclusive when an illegal word exceeds
// max_letters.
CyclicPeriodResult cyclic_word_period(const MapChain& f, const GateStructure& gates, std::span<const Edge> loop,
                                      int max_power, std::size_t max_letters = 1'000'000);

bool is_cyclically_legal(const GateStructure& gates, std::span<const Edge> w);

}  // namespace iwip
