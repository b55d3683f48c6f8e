#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "iwip/certify.hpp"
#include "iwip/graph_map.hpp"
#include "iwip/index_list.hpp"
#include "iwip/map_chain.hpp"

namespace iwip {

// Rose with petals a, b, c, ... (x1, x2, ... past 26).
std::shared_ptr<const Graph> make_labelled_rose(int rank);

// Elementary positive Nielsen map on the rose: petal `target` goes to
// target·other (right) or other·target (left).
GraphMap elementary_map(std::shared_ptr<const Graph> rose, int target, int other, bool right);

// L elementary factors drawn uniformly among the 2N(N-1) positive elementary
// maps, outermost first. The draw depends only on (rank, length, seed).
MapChain sample_positive_factors(int rank, int length, std::uint64_t seed);
// The same composition with its edge images expanded.
GraphMap sample_positive_automorphism(int rank, int length, std::uint64_t seed);

// Seed of sample i, independent of evaluation order.
std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index);

enum class SampleOutcome { Conditional, InpPresent, NonExpanding, Other };
std::string to_string(SampleOutcome outcome);

struct SampleGrade {
  SampleOutcome outcome = SampleOutcome::Other;
  IndexList index_list;
  std::string reason;
};

SampleGrade grade_sample(const MapChain& f, const InpOptions& options);

struct FrequencyTable {
  int rank = 0;
  int length = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::map<IndexList, int> counts;  // index lists of conditional iwips
  int conditional = 0;
  int inp_present = 0;
  int non_expanding = 0;
  int other = 0;  // not primitive, disconnected Whitehead graph, or inconclusive search
  double elapsed_seconds = 0.0;

  double conditional_fraction() const { return samples == 0 ? 0.0 : static_cast<double>(conditional) / samples; }
  // Index lists by decreasing count, ties by list order.
  std::vector<std::pair<IndexList, int>> ranked() const;
};

struct ExperimentOptions {
  InpOptions inp;
  unsigned threads = 0;  // 0: hardware concurrency
};

FrequencyTable run_experiment(int rank, int length, int samples, std::uint64_t seed,
                              const ExperimentOptions& options = {});

// Aligned text: N, L, samples, conditional share, top index lists, time.
std::string format_table(const FrequencyTable& table, std::size_t top = 5, bool include_timing = true);

}  // namespace iwip
