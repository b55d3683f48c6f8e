#include "iwip/inp.hpp"

#include <algorithm>

namespace iwip {

namespace {

enum class BranchFit { Short, Exact, Over };

BranchFit fit(const EdgeWord& remainder, const EdgeWord& branch) {
  if (remainder.size() > branch.size()) return BranchFit::Over;
  if (!std::equal(remainder.begin(), remainder.end(), branch.begin())) return BranchFit::Over;
  return remainder.size() == branch.size() ? BranchFit::Exact : BranchFit::Short;
}

struct Candidate {
  EdgeWord first;
  EdgeWord second;
};

bool same_inp(const Inp& a, const Inp& b) { return a.first == b.first && a.second == b.second; }

}  // namespace

InpSearchResult find_periodic_inps(const MapChain& f, const GateStructure& gates, const InpOptions& options) {
  const Graph& g = f.graph();
  for (double len : f.image_lengths())
    if (len < 2.0) throw MapError("periodic INP search needs every edge image to have length at least 2");

  InpSearchResult result;
  result.period_bound = options.period_bound;
  result.length_bound = options.length_bound;
  const std::size_t base_cut = std::max<std::size_t>(64, 2 * static_cast<std::size_t>(options.length_bound) + 2);
  const auto length_bound = static_cast<std::size_t>(options.length_bound);

  for (int p = 1; p <= options.period_bound; ++p) {
    const MapChain fp = f.power(p);
    for (const Turn& turn : illegal_turns(g, gates)) {
      std::vector<Candidate> stack{{{turn.first}, {turn.second}}};
      while (!stack.empty()) {
        if (result.nodes >= options.node_budget) {
          result.verdict = InpVerdict::Inconclusive;
          result.note = "node budget exhausted";
          return result;
        }
        Candidate node = std::move(stack.back());
        stack.pop_back();
        ++result.nodes;

        std::size_t cut = base_cut;
        TraceResult r;
        BranchFit first_fit = BranchFit::Over;
        BranchFit second_fit = BranchFit::Over;
        bool undecided = true;
        while (undecided) {
          r = trace_long_turn(fp, gates, TraceInput{node.first, node.second, false, false}, cut, true);
          undecided = r.fate == TraceFate::CutTooShort;
          if (r.fate == TraceFate::Illegal) {
            // A truncated remainder is a proper prefix of the true one.
            const auto pending = [](const EdgeWord& rem, bool exact, const EdgeWord& branch) {
              return !exact && rem.size() <= branch.size();
            };
            undecided = pending(r.first, r.first_exact, node.first) || pending(r.second, r.second_exact, node.second);
            if (!undecided) {
              first_fit = r.first_exact ? fit(r.first, node.first) : BranchFit::Over;
              second_fit = r.second_exact ? fit(r.second, node.second) : BranchFit::Over;
            }
          }
          if (undecided) {
            cut *= 2;
            if (cut > options.max_cut) {
              result.verdict = InpVerdict::Inconclusive;
              result.note = "cancellation exceeds the truncation bound";
              return result;
            }
          }
        }

        const auto push_extensions = [&](bool first) {
          const EdgeWord& branch = first ? node.first : node.second;
          if (branch.size() >= length_bound) return;
          const auto next = legal_continuations(g, gates, branch.back());
          for (auto it = next.rbegin(); it != next.rend(); ++it) {
            Candidate child = node;
            (first ? child.first : child.second).push_back(*it);
            stack.push_back(std::move(child));
          }
        };

        switch (r.fate) {
          case TraceFate::Legal:
            break;
          case TraceFate::NotLong:
            push_extensions(r.first_exhausted);
            break;
          case TraceFate::Illegal: {
            if (r.first.front() != node.first.front() || r.second.front() != node.second.front()) break;
            if (first_fit == BranchFit::Over || second_fit == BranchFit::Over) break;
            if (first_fit == BranchFit::Exact && second_fit == BranchFit::Exact) {
              Inp inp{turn, p, node.first, node.second, false};
              EdgeWord path = reversed(node.first);
              path.insert(path.end(), node.second.begin(), node.second.end());
              if (auto image = fp.apply(path, 10'000'000)) inp.verified_by_expansion = tighten(*image) == path;
              const bool seen = std::any_of(result.found.begin(), result.found.end(),
                                            [&](const Inp& other) { return same_inp(other, inp); });
              if (!seen) result.found.push_back(std::move(inp));
              break;
            }
            push_extensions(first_fit == BranchFit::Short);
            break;
          }
          default:
            break;
        }
      }
    }
  }
  result.verdict = result.found.empty() ? InpVerdict::NoneFound : InpVerdict::Found;
  return result;
}

bool is_cyclically_legal(const GateStructure& gates, std::span<const Edge> w) {
  if (w.empty() || !is_legal_path(gates, w)) return false;
  return !gates.same_gate(w.back().reversed(), w.front());
}

CyclicPeriodResult cyclic_word_period(const MapChain& f, const GateStructure& gates, std::span<const Edge> loop,
                                      int max_power, std::size_t max_letters) {
  const EdgeWord start = tighten_cyclic(loop);
  if (start.empty()) return {CyclicVerdict::Periodic, 1};
  EdgeWord cur = start;
  for (int t = 1; t <= max_power; ++t) {
    for (std::size_t i = f.factor_count(); i-- > 0;) {
      const GraphMap& factor = f.factor(i);
      std::size_t len = 0;
      for (Edge e : cur) len += factor.image(e).size();
      if (len > max_letters) {
        if (is_cyclically_legal(gates, cur)) return {CyclicVerdict::NotPeriodic, 0};
        return {CyclicVerdict::Inconclusive, 0};
      }
      cur = tighten_cyclic(factor.apply(cur));
    }
    if (cyclically_equal(cur, start)) return {CyclicVerdict::Periodic, t};
    if (cur.size() > start.size() && is_cyclically_legal(gates, cur)) return {CyclicVerdict::NotPeriodic, 0};
  }
  return {CyclicVerdict::NotPeriodic, 0};
}

}  // namespace iwip
