#include "iwip/map_chain.hpp"

namespace iwip {

MapChain::MapChain(std::shared_ptr<const Graph> graph) : graph_(std::move(graph)) {}

MapChain::MapChain(GraphMap f) : graph_(f.graph_ptr()) {
  factors_.push_back(std::make_shared<const GraphMap>(std::move(f)));
}

MapChain::MapChain(std::shared_ptr<const Graph> graph, std::vector<std::shared_ptr<const GraphMap>> factors)
    : graph_(std::move(graph)), factors_(std::move(factors)) {
  for (const auto& f : factors_)
    if (!f || f->graph_ptr() != graph_) throw MapError("chain factor on a different graph");
}

MapChain MapChain::then_after(const MapChain& inner) const {
  if (inner.graph_ != graph_) throw MapError("composing chains on different graphs");
  auto fs = factors_;
  fs.insert(fs.end(), inner.factors_.begin(), inner.factors_.end());
  return MapChain(graph_, std::move(fs));
}

MapChain MapChain::prepended(std::shared_ptr<const GraphMap> outer) const {
  std::vector<std::shared_ptr<const GraphMap>> fs;
  fs.reserve(factors_.size() + 1);
  fs.push_back(std::move(outer));
  fs.insert(fs.end(), factors_.begin(), factors_.end());
  return MapChain(graph_, std::move(fs));
}

MapChain MapChain::power(int p) const {
  if (p < 0) throw MapError("negative power");
  std::vector<std::shared_ptr<const GraphMap>> fs;
  fs.reserve(factors_.size() * static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) fs.insert(fs.end(), factors_.begin(), factors_.end());
  return MapChain(graph_, std::move(fs));
}

MapChain compose(const MapChain& outer, const MapChain& inner) { return outer.then_after(inner); }

std::vector<Vertex> MapChain::vertex_map() const {
  std::vector<Vertex> v(static_cast<std::size_t>(graph_->vertex_count()));
  for (int i = 0; i < graph_->vertex_count(); ++i) v[static_cast<std::size_t>(i)] = Vertex{i};
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    for (auto& x : v) x = (*it)->image(x);
  return v;
}

bool MapChain::fixes_vertices() const {
  const auto v = vertex_map();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].id != static_cast<int>(i)) return false;
  return true;
}

std::vector<Edge> MapChain::direction_map() const {
  std::vector<Edge> d(static_cast<std::size_t>(graph_->directed_count()));
  for (int id = 0; id < graph_->directed_count(); ++id) d[static_cast<std::size_t>(id)] = Edge{id};
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    for (auto& x : d) {
      const auto img = (*it)->image(x);
      if (img.empty()) throw MapError("contracted edge " + graph_->token(x));
      x = img.front();
    }
  }
  return d;
}

SupportMatrix MapChain::support_matrix() const {
  const int n = graph_->edge_count();
  SupportMatrix m = SupportMatrix::Identity(n, n);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    m = boolean_product(support(transition_matrix<int>(**it)), m);
  return m;
}

DynMatrix<double> MapChain::transition_weights() const {
  const int n = graph_->edge_count();
  DynMatrix<double> m = DynMatrix<double>::Identity(n, n);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) m = transition_matrix<double>(**it) * m;
  return m;
}

std::vector<double> MapChain::image_lengths() const {
  const DynMatrix<double> m = transition_weights();
  std::vector<double> out(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(j)] = m.col(j).sum();
  return out;
}

TurnSet MapChain::crossed_turns() const {
  // For f ∘ g: turns of f∘g = turns of f(x) for x crossed by g, plus Df of
  // turns of g. `crossed` tracks the edges appearing in the images so far.
  const int d = graph_->directed_count();
  const int n = graph_->edge_count();
  TurnSet turns(d);
  std::vector<char> crossed(static_cast<std::size_t>(n), 1);  // identity crosses every edge
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    const GraphMap& f = **it;
    TurnSet next(d);
    for (const Turn& t : turns.turns()) {
      const auto a = f.image(t.first);
      const auto b = f.image(t.second);
      if (a.empty() || b.empty()) throw MapError("contracted edge in chain");
      next.insert(Turn::of(a.front(), b.front()));
    }
    std::vector<char> next_crossed(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      if (!crossed[static_cast<std::size_t>(k)]) continue;
      const auto img = f.image(Edge::positive_of(k));
      for (const Turn& t : iwip::crossed_turns(img)) next.insert(t);
      for (Edge x : img) next_crossed[static_cast<std::size_t>(x.index())] = 1;
    }
    turns = std::move(next);
    crossed = std::move(next_crossed);
  }
  return turns;
}

std::optional<GraphMap> MapChain::materialize(std::size_t max_letters) const {
  for (double len : image_lengths())
    if (len > static_cast<double>(max_letters)) return std::nullopt;
  GraphMap acc = GraphMap::identity(graph_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) acc = compose_maps(**it, acc);
  return acc;
}

std::optional<EdgeWord> MapChain::apply(std::span<const Edge> w, std::size_t max_letters) const {
  EdgeWord cur(w.begin(), w.end());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    EdgeWord next;
    for (Edge e : cur) {
      const auto img = (*it)->image(e);
      if (next.size() + img.size() > max_letters) return std::nullopt;
      next.insert(next.end(), img.begin(), img.end());
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace iwip
