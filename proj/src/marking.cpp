#include "iwip/marking.hpp"

#include <algorithm>

namespace iwip {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    if (l.id & 1) out += '~';
    out += 'x' + std::to_string(l.generator() + 1);
  }
  return out;
}

Word FreeEndomorphism::apply(const Word& w) const {
  Word out;
  for (Letter l : w) {
    const Word& img = images.at(static_cast<std::size_t>(l.generator()));
    if (l.id & 1) {
      const Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return free_reduce(out);
}

std::optional<FreeEndomorphism> compose(const FreeEndomorphism& outer, const FreeEndomorphism& inner,
                                        std::size_t max_letters) {
  FreeEndomorphism out;
  for (const Word& w : inner.images) {
    std::size_t len = 0;
    for (Letter l : w) len += outer.images.at(static_cast<std::size_t>(l.generator())).size();
    if (len > max_letters) return std::nullopt;
    out.images.push_back(outer.apply(w));
  }
  return out;
}

namespace {

Word conjugate(const Word& w, Letter x) {
  Word out = w;
  out.push_back(x);
  const Word inv = inverse(w);
  out.insert(out.end(), inv.begin(), inv.end());
  return free_reduce(out);
}

}  // namespace

bool is_inner(const FreeEndomorphism& phi) {
  const std::size_t n = phi.images.size();
  if (n == 0) return true;
  const Letter x1{0};
  std::vector<Word> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = free_reduce(phi.images[i]);
  if (n == 1) return y[0] == Word{x1};

  // y1 = p c p^-1 with c cyclically reduced; c must be x1.
  const Word& y1 = y[0];
  std::size_t k = 0;
  while (2 * k + 2 <= y1.size() && y1[k] == y1[y1.size() - 1 - k].inverse()) ++k;
  if (y1.size() != 2 * k + 1 || y1[k] != x1) return false;
  Word p(y1.begin(), y1.begin() + static_cast<std::ptrdiff_t>(k));

  // The conjugator is p x1^m; m is read off p^-1 y2 p = x1^m x2 x1^-m.
  Word z = inverse(p);
  z.insert(z.end(), y[1].begin(), y[1].end());
  z.insert(z.end(), p.begin(), p.end());
  z = free_reduce(z);
  Word w = p;
  for (Letter l : z) {
    if (l.generator() != 0) break;
    w.push_back(l);
  }
  w = free_reduce(w);
  for (std::size_t i = 0; i < n; ++i)
    if (conjugate(w, Letter{static_cast<int>(2 * i)}) != y[i]) return false;
  return true;
}

Pi1Marking::Pi1Marking(std::shared_ptr<const Graph> graph, Vertex basepoint)
    : graph_(std::move(graph)), basepoint_(basepoint) {
  const Graph& g = *graph_;
  if (basepoint.id < 0 || basepoint.id >= g.vertex_count()) throw GraphError("basepoint out of range");
  std::vector<char> in_tree(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<char> is_tree_edge(static_cast<std::size_t>(g.edge_count()), 0);
  tree_path_.assign(static_cast<std::size_t>(g.vertex_count()), {});
  in_tree[static_cast<std::size_t>(basepoint.id)] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (int k = 0; k < g.edge_count() && !grew; ++k) {
      const Edge e = Edge::positive_of(k);
      const bool a = in_tree[static_cast<std::size_t>(g.init(e).id)];
      const bool b = in_tree[static_cast<std::size_t>(g.terminal(e).id)];
      if (a == b) continue;
      const Edge out = a ? e : e.reversed();
      const Vertex from = g.init(out);
      const Vertex to = g.terminal(out);
      tree_path_[static_cast<std::size_t>(to.id)] = tree_path_[static_cast<std::size_t>(from.id)];
      tree_path_[static_cast<std::size_t>(to.id)].push_back(out);
      in_tree[static_cast<std::size_t>(to.id)] = 1;
      is_tree_edge[static_cast<std::size_t>(k)] = 1;
      tree_.push_back(e);
      grew = true;
    }
  }
  if (std::find(in_tree.begin(), in_tree.end(), 0) != in_tree.end())
    throw GraphError("graph is not connected");
  std::sort(tree_.begin(), tree_.end());
  generator_of_.assign(static_cast<std::size_t>(g.edge_count()), -1);
  for (int k = 0; k < g.edge_count(); ++k) {
    if (is_tree_edge[static_cast<std::size_t>(k)]) continue;
    generator_of_[static_cast<std::size_t>(k)] = static_cast<int>(basis_.size());
    basis_.push_back(Edge::positive_of(k));
  }
}

EdgeWord Pi1Marking::generator_loop(int i) const {
  const Edge e = basis_.at(static_cast<std::size_t>(i));
  EdgeWord loop = tree_path(graph_->init(e));
  loop.push_back(e);
  const EdgeWord back = reversed(tree_path(graph_->terminal(e)));
  loop.insert(loop.end(), back.begin(), back.end());
  return loop;
}

Word Pi1Marking::read(std::span<const Edge> path) const {
  Word w;
  for (Edge e : path) {
    const int gen = generator_of_[static_cast<std::size_t>(e.index())];
    if (gen >= 0) w.push_back(Letter{2 * gen + (e.positive() ? 0 : 1)});
  }
  return free_reduce(w);
}

EdgeWord Pi1Marking::loop_of(const Word& w) const {
  EdgeWord out;
  for (Letter l : w) {
    EdgeWord loop = generator_loop(l.generator());
    if (l.id & 1) loop = reversed(loop);
    out.insert(out.end(), loop.begin(), loop.end());
  }
  return tighten(out);
}

FreeEndomorphism pi1_automorphism(const GraphMap& f, const Pi1Marking& marking) {
  FreeEndomorphism phi;
  for (int i = 0; i < marking.rank(); ++i) phi.images.push_back(marking.read(f.apply(marking.generator_loop(i))));
  return phi;
}

bool verify_homotopy_equivalence(const GraphMap& f, const GraphMap& inverse, const Pi1Marking& marking) {
  return is_inner(pi1_automorphism(compose_maps(inverse, f), marking));
}

}  // namespace iwip
