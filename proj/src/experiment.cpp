#include "iwip/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "iwip/traintrack.hpp"

namespace iwip {

namespace {

// Unbiased draw in [0, bound) by rejection on the raw 64-bit output, so the
// sequence does not depend on the standard library's distributions.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace

std::shared_ptr<const Graph> make_labelled_rose(int rank) {
  std::vector<std::string> labels;
  for (int i = 0; i < rank; ++i)
    labels.push_back(rank <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
  return std::make_shared<const Graph>(make_rose(labels));
}

GraphMap elementary_map(std::shared_ptr<const Graph> rose, int target, int other, bool right) {
  const Edge t = Edge::positive_of(target);
  const Edge o = Edge::positive_of(other);
  EdgeWord image = right ? EdgeWord{t, o} : EdgeWord{o, t};
  return GraphMap::with_overrides(std::move(rose), {{t, std::move(image)}});
}

std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

MapChain sample_positive_factors(int rank, int length, std::uint64_t seed) {
  if (rank < 2 || length < 1) throw InputError("sampling needs rank >= 2 and length >= 1");
  auto rose = make_labelled_rose(rank);
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::uint64_t>(rank);
  std::vector<std::shared_ptr<const GraphMap>> factors;
  for (int step = 0; step < length; ++step) {
    std::uint64_t k = draw_below(rng, 2 * n * (n - 1));
    const bool right = (k & 1) == 0;
    k >>= 1;
    const int target = static_cast<int>(k / (n - 1));
    int other = static_cast<int>(k % (n - 1));
    if (other >= target) ++other;
    factors.push_back(std::make_shared<const GraphMap>(elementary_map(rose, target, other, right)));
  }
  return MapChain(rose, std::move(factors));
}

GraphMap sample_positive_automorphism(int rank, int length, std::uint64_t seed) {
  const MapChain chain = sample_positive_factors(rank, length, seed);
  auto map = chain.materialize(std::numeric_limits<std::size_t>::max());
  return std::move(*map);
}

std::string to_string(SampleOutcome outcome) {
  switch (outcome) {
    case SampleOutcome::Conditional: return "conditional";
    case SampleOutcome::InpPresent: return "inp_present";
    case SampleOutcome::NonExpanding: return "non_expanding";
    case SampleOutcome::Other: return "other";
  }
  return "?";
}

SampleGrade grade_sample(const MapChain& f, const InpOptions& options) {
  SampleGrade grade;
  if (!is_classical_train_track(f)) {
    grade.reason = "not a train track map";
    return grade;
  }
  if (expanding_power(f, f.graph().directed_count()) == 0) {
    grade.outcome = SampleOutcome::NonExpanding;
    grade.reason = "no power expands every edge";
    return grade;
  }
  try {
    const CertificationReport report = grade_train_track_map(f, options);
    grade.index_list = report.index_list;
    if (report.level == CertificationLevel::Conditional)
      grade.outcome = SampleOutcome::Conditional;
    else if (report.inp.verdict == InpVerdict::Found)
      grade.outcome = SampleOutcome::InpPresent;
    if (!report.notes.empty()) grade.reason = report.notes.front();
  } catch (const MapError& e) {
    grade.reason = e.what();
  }
  return grade;
}

std::vector<std::pair<IndexList, int>> FrequencyTable::ranked() const {
  std::vector<std::pair<IndexList, int>> out(counts.begin(), counts.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

FrequencyTable run_experiment(int rank, int length, int samples, std::uint64_t seed,
                              const ExperimentOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  FrequencyTable table;
  table.rank = rank;
  table.length = length;
  table.samples = samples;
  table.seed = seed;
  if (samples < 0) throw InputError("sample count must be non-negative");
  if (samples > 0 && (rank < 2 || length < 1)) throw InputError("experiment needs rank >= 2 and length >= 1");

  std::vector<SampleGrade> grades(static_cast<std::size_t>(samples));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < samples; i = next++)
      grades[static_cast<std::size_t>(i)] =
          grade_sample(sample_positive_factors(rank, length, sample_seed(seed, static_cast<std::uint64_t>(i))),
                       options.inp);
  };
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(samples, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const SampleGrade& g : grades) {
    switch (g.outcome) {
      case SampleOutcome::Conditional:
        ++table.conditional;
        ++table.counts[g.index_list];
        break;
      case SampleOutcome::InpPresent: ++table.inp_present; break;
      case SampleOutcome::NonExpanding: ++table.non_expanding; break;
      case SampleOutcome::Other: ++table.other; break;
    }
  }
  table.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return table;
}

std::string format_table(const FrequencyTable& table, std::size_t top, bool include_timing) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "N" << std::setw(6) << "L" << std::setw(9) << "samples" << std::setw(13)
      << "conditional" << "top index lists\n";
  std::ostringstream share;
  share << std::fixed << std::setprecision(0) << 100.0 * table.conditional_fraction() << '%';
  std::string lists;
  const auto ranked = table.ranked();
  for (std::size_t i = 0; i < ranked.size() && i < top; ++i) {
    if (!lists.empty()) lists += "  ";
    std::ostringstream pct;
    pct << std::fixed << std::setprecision(0)
        << (table.conditional == 0 ? 0.0 : 100.0 * ranked[i].second / table.conditional);
    lists += ranked[i].first.to_string() + " " + pct.str() + "%";
  }
  out << std::setw(4) << table.rank << std::setw(6) << table.length << std::setw(9) << table.samples << std::setw(13)
      << share.str() << (lists.empty() ? "-" : lists) << '\n';
  out << "inp present " << table.inp_present << ", non-expanding " << table.non_expanding << ", other "
      << table.other << '\n';
  if (include_timing) out << "elapsed " << std::fixed << std::setprecision(2) << table.elapsed_seconds << " s\n";
  return out.str();
}

}  // namespace iwip
