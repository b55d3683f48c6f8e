#include "iwip/long_turns.hpp"

#include <algorithm>
#include <limits>

namespace iwip {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

void legal_paths_from(const Graph& g, const GateStructure& gates, EdgeWord& prefix, int c,
                      std::vector<EdgeWord>& out) {
  if (static_cast<int>(prefix.size()) == c) {
    out.push_back(prefix);
    return;
  }
  for (Edge x : legal_continuations(g, gates, prefix.back())) {
    prefix.push_back(x);
    legal_paths_from(g, gates, prefix, c, out);
    prefix.pop_back();
  }
}

std::size_t common_prefix(const EdgeWord& a, const EdgeWord& b) {
  const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(ia - a.begin());
}

}  // namespace

void for_each_long_turn(const Graph& g, const GateStructure& gates, int c,
                        const std::function<bool(const LongTurn&)>& visit) {
  if (c < 1) return;
  std::vector<std::vector<EdgeWord>> paths(static_cast<std::size_t>(g.directed_count()));
  auto paths_of = [&](Edge e) -> const std::vector<EdgeWord>& {
    auto& slot = paths[static_cast<std::size_t>(e.id)];
    if (slot.empty()) {
      EdgeWord prefix{e};
      legal_paths_from(g, gates, prefix, c, slot);
    }
    return slot;
  };
  for (const Turn& t : all_turns(g)) {
    const auto& firsts = paths_of(t.first);
    const auto& seconds = paths_of(t.second);
    for (const auto& a : firsts)
      for (const auto& b : seconds)
        if (!visit(LongTurn{g.init(t.first), a, b})) return;
  }
}

std::vector<LongTurn> enumerate_long_turns(const Graph& g, const GateStructure& gates, int c) {
  std::vector<LongTurn> out;
  for_each_long_turn(g, gates, c, [&](const LongTurn& lt) {
    out.push_back(lt);
    return true;
  });
  return out;
}

namespace {

std::vector<std::uint64_t> legal_path_counts(const Graph& g, const GateStructure& gates, int c) {
  const auto d = static_cast<std::size_t>(g.directed_count());
  std::vector<std::uint64_t> count(d, c >= 1 ? 1 : 0);
  for (int m = 2; m <= c; ++m) {
    std::vector<std::uint64_t> next(d, 0);
    for (int id = 0; id < g.directed_count(); ++id)
      for (Edge x : legal_continuations(g, gates, Edge{id}))
        next[static_cast<std::size_t>(id)] = sat_add(next[static_cast<std::size_t>(id)], count[static_cast<std::size_t>(x.id)]);
    count = std::move(next);
  }
  return count;
}

}  // namespace

std::uint64_t count_legal_paths(const Graph& g, const GateStructure& gates, Edge e, int c) {
  return legal_path_counts(g, gates, c)[static_cast<std::size_t>(e.id)];
}

std::uint64_t count_long_turns(const Graph& g, const GateStructure& gates, int c) {
  const auto count = legal_path_counts(g, gates, c);
  std::uint64_t total = 0;
  for (const Turn& t : all_turns(g))
    total = sat_add(total, sat_mul(count[static_cast<std::size_t>(t.first.id)], count[static_cast<std::size_t>(t.second.id)]));
  return total;
}

std::optional<LongTurn> long_turn_image(const GraphMap& f, const LongTurn& lt) {
  EdgeWord a = tighten(f.apply(lt.first));
  EdgeWord b = tighten(f.apply(lt.second));
  const std::size_t k = common_prefix(a, b);
  if (k == a.size() || k == b.size()) return std::nullopt;
  const Vertex start = k == 0 ? f.image(lt.start) : f.graph().terminal(a[k - 1]);
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
  b.erase(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(k));
  return LongTurn{start, std::move(a), std::move(b)};
}

TraceResult trace_long_turn(const MapChain& f, const GateStructure& gates, const TraceInput& in,
                            std::size_t cut, bool stop_when_legal) {
  TraceResult r;
  r.first = in.first;
  r.second = in.second;
  bool first_open = in.first_open;
  bool second_open = in.second_open;
  EdgeWord buffer;
  const auto step = [&](const GraphMap& factor, EdgeWord& w) {
    buffer.clear();
    factor.apply_into(w, buffer);
    w.swap(buffer);
  };
  for (std::size_t i = f.factor_count(); i-- > 0;) {
    const GraphMap& factor = f.factor(i);
    step(factor, r.first);
    step(factor, r.second);
    const std::size_t k = common_prefix(r.first, r.second);
    if (k == r.first.size() || k == r.second.size()) {
      r.first_exhausted = k == r.first.size();
      r.second_exhausted = k == r.second.size();
      const auto blocked = [&](bool exhausted, bool exact) { return exhausted && !exact; };
      if (blocked(r.first_exhausted, r.first_exact) || blocked(r.second_exhausted, r.second_exact))
        r.fate = TraceFate::CutTooShort;
      else if (r.first_exhausted && first_open)
        r.fate = TraceFate::ExtendFirst;
      else if (r.second_exhausted && second_open)
        r.fate = TraceFate::ExtendSecond;
      else
        r.fate = TraceFate::NotLong;
      return r;
    }
    r.first.erase(r.first.begin(), r.first.begin() + static_cast<std::ptrdiff_t>(k));
    r.second.erase(r.second.begin(), r.second.begin() + static_cast<std::ptrdiff_t>(k));
    if (stop_when_legal && !gates.same_gate(r.first.front(), r.second.front())) {
      r.fate = TraceFate::Legal;
      return r;
    }
    if (r.first.size() > cut) {
      r.first.resize(cut);
      r.first_exact = false;
      first_open = false;
    }
    if (r.second.size() > cut) {
      r.second.resize(cut);
      r.second_exact = false;
      second_open = false;
    }
  }
  r.fate = gates.same_gate(r.first.front(), r.second.front()) ? TraceFate::Illegal : TraceFate::Legal;
  return r;
}

namespace {

EdgeWord extend_to(const Graph& g, const GateStructure& gates, EdgeWord w, int c) {
  while (static_cast<int>(w.size()) < c) {
    const auto next = legal_continuations(g, gates, w.back());
    if (next.empty()) break;
    w.push_back(next.front());
  }
  return w;
}

}  // namespace

LegalizingCertificate verify_legalizing(const MapChain& f, const GateStructure& gates, int c,
                                        const LegalizingOptions& options) {
  const Graph& g = f.graph();
  LegalizingCertificate cert;
  cert.c = c;
  cert.checked = count_long_turns(g, gates, c);
  if (c < 1) throw MapError("legalizing constant must be positive");

  const auto fail = [&](EdgeWord a, EdgeWord b, bool not_long, std::optional<Turn> image_turn) {
    cert.verdict = LegalizingVerdict::NotLegalizing;
    cert.witness = LongTurn{g.init(a.front()), extend_to(g, gates, std::move(a), c),
                            extend_to(g, gates, std::move(b), c)};
    cert.witness_not_long = not_long;
    cert.witness_image_turn = image_turn;
    return cert;
  };

  // A long turn with a legal starting turn maps to one with the Df-image
  // turn, which must be legal.
  const auto df = f.direction_map();
  for (const Turn& t : all_turns(g)) {
    if (!is_legal_turn(gates, t)) continue;
    const Turn image = Turn::of(df[static_cast<std::size_t>(t.first.id)], df[static_cast<std::size_t>(t.second.id)]);
    if (image.degenerate() || !is_legal_turn(gates, image))
      return fail({t.first}, {t.second}, image.degenerate(), image);
  }

  std::vector<TraceInput> stack;
  const auto turns = illegal_turns(g, gates);
  for (auto it = turns.rbegin(); it != turns.rend(); ++it)
    stack.push_back(TraceInput{{it->first}, {it->second}, c > 1, c > 1});

  while (!stack.empty()) {
    TraceInput node = std::move(stack.back());
    stack.pop_back();
    ++cert.nodes;
    std::size_t cut = options.initial_cut;
    TraceResult r;
    while (true) {
      r = trace_long_turn(f, gates, node, cut, true);
      if (r.fate != TraceFate::CutTooShort) break;
      cut *= 2;
      if (cut > options.max_cut) throw MapError("cancellation in long-turn images exceeds the truncation bound");
    }
    switch (r.fate) {
      case TraceFate::Legal:
        break;
      case TraceFate::Illegal:
        return fail(node.first, node.second, false, Turn::of(r.first.front(), r.second.front()));
      case TraceFate::NotLong:
        return fail(node.first, node.second, true, std::nullopt);
      case TraceFate::ExtendFirst:
      case TraceFate::ExtendSecond: {
        const bool first = r.fate == TraceFate::ExtendFirst;
        const EdgeWord& branch = first ? node.first : node.second;
        const auto next = legal_continuations(g, gates, branch.back());
        for (auto it = next.rbegin(); it != next.rend(); ++it) {
          TraceInput child = node;
          EdgeWord& grown = first ? child.first : child.second;
          grown.push_back(*it);
          (first ? child.first_open : child.second_open) = static_cast<int>(grown.size()) < c;
          stack.push_back(std::move(child));
        }
        break;
      }
      case TraceFate::CutTooShort:
        break;
    }
  }
  cert.verdict = LegalizingVerdict::Legalizing;
  return cert;
}

}  // namespace iwip
