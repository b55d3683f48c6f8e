#include "iwip/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace iwip {

Vertex Graph::add_vertex(std::string name) {
  if (find_vertex(name)) throw GraphError("duplicate vertex name: " + name);
  vertex_names_.push_back(std::move(name));
  outgoing_.emplace_back();
  return Vertex{vertex_count() - 1};
}

Edge Graph::add_edge(std::string label, Vertex from, Vertex to) {
  check(from);
  check(to);
  if (label.empty() || label.front() == '~') throw GraphError("invalid edge label: " + label);
  if (find_edge(label)) throw GraphError("duplicate edge label: " + label);
  labels_.push_back(std::move(label));
  from_.push_back(from);
  to_.push_back(to);
  const Edge e = Edge::positive_of(edge_count() - 1);
  auto insert_sorted = [](std::vector<Edge>& out, Edge x) {
    out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  };
  insert_sorted(outgoing_[from.id], e);
  insert_sorted(outgoing_[to.id], e.reversed());
  return e;
}

void Graph::check(Vertex v) const {
  if (v.id < 0 || v.id >= vertex_count()) throw GraphError("vertex out of range");
}

void Graph::check(Edge e) const {
  if (e.id < 0 || e.id >= directed_count()) throw GraphError("edge out of range");
}

Vertex Graph::init(Edge e) const {
  check(e);
  return e.positive() ? from_[e.index()] : to_[e.index()];
}

const std::string& Graph::vertex_name(Vertex v) const {
  check(v);
  return vertex_names_[v.id];
}

const std::string& Graph::label(Edge e) const {
  check(e);
  return labels_[e.index()];
}

std::string Graph::token(Edge e) const {
  return e.positive() ? label(e) : "~" + label(e);
}

std::optional<Edge> Graph::find_edge(std::string_view token) const {
  const bool inverse = !token.empty() && token.front() == '~';
  if (inverse) token.remove_prefix(1);
  const auto it = std::find(labels_.begin(), labels_.end(), token);
  if (it == labels_.end()) return std::nullopt;
  const Edge e = Edge::positive_of(static_cast<int>(it - labels_.begin()));
  return inverse ? e.reversed() : e;
}

std::optional<Vertex> Graph::find_vertex(std::string_view name) const {
  const auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) return std::nullopt;
  return Vertex{static_cast<int>(it - vertex_names_.begin())};
}

const std::vector<Edge>& Graph::outgoing(Vertex v) const {
  check(v);
  return outgoing_[v.id];
}

std::vector<Edge> Graph::positive_edges() const {
  std::vector<Edge> out(edge_count());
  for (int k = 0; k < edge_count(); ++k) out[k] = Edge::positive_of(k);
  return out;
}

bool is_path(const Graph& g, const Path& p) {
  if (p.start.id < 0 || p.start.id >= g.vertex_count()) return false;
  Vertex at = p.start;
  for (Edge e : p.edges) {
    if (e.id < 0 || e.id >= g.directed_count() || g.init(e) != at) return false;
    at = g.terminal(e);
  }
  return true;
}

Vertex end_vertex(const Graph& g, const Path& p) {
  return p.edges.empty() ? p.start : g.terminal(p.edges.back());
}

EdgeWord reversed(std::span<const Edge> w) {
  EdgeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->reversed());
  return out;
}

Path reversed(const Graph& g, const Path& p) {
  return Path{end_vertex(g, p), reversed(p.edges)};
}

bool is_reduced(std::span<const Edge> w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].reversed()) return false;
  return true;
}

EdgeWord tighten(std::span<const Edge> w) {
  EdgeWord out;
  out.reserve(w.size());
  for (Edge e : w) {
    if (!out.empty() && out.back() == e.reversed())
      out.pop_back();
    else
      out.push_back(e);
  }
  return out;
}

Path tighten(const Path& p) { return Path{p.start, tighten(p.edges)}; }

EdgeWord tighten_cyclic(std::span<const Edge> w) {
  EdgeWord t = tighten(w);
  std::size_t lo = 0;
  std::size_t hi = t.size();
  while (hi - lo >= 2 && t[lo] == t[hi - 1].reversed()) {
    ++lo;
    --hi;
  }
  return EdgeWord(t.begin() + static_cast<std::ptrdiff_t>(lo),
                  t.begin() + static_cast<std::ptrdiff_t>(hi));
}

bool cyclically_equal(std::span<const Edge> a, std::span<const Edge> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = a[(i + shift) % n] == b[i];
    if (same) return true;
  }
  return false;
}

std::string format_word(const Graph& g, std::span<const Edge> w) {
  std::string out;
  for (Edge e : w) {
    if (!out.empty()) out += ' ';
    out += g.token(e);
  }
  return out;
}

EdgeWord parse_word(const Graph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  EdgeWord out;
  for (std::string tok; in >> tok;) {
    auto e = g.find_edge(tok);
    if (!e) throw GraphError("unknown edge token: " + tok);
    out.push_back(*e);
  }
  return out;
}

GraphDiagnostics validate_graph(const Graph& g) {
  GraphDiagnostics d;
  d.rank = g.rank();
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge e = Edge::positive_of(k);
    if (g.init(e).id >= g.vertex_count() || g.terminal(e).id >= g.vertex_count())
      d.endpoints_valid = false;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int val = g.valence(Vertex{v});
    if (val == 1 || val == 2) d.low_valence.push_back(Vertex{v});
  }
  if (g.vertex_count() > 0) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = g.vertex_count();
    for (int k = 0; k < g.edge_count(); ++k) {
      const Edge e = Edge::positive_of(k);
      const int a = find(g.init(e).id);
      const int b = find(g.terminal(e).id);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    d.connected = components == 1;
  }
  return d;
}

Graph make_rose(const std::vector<std::string>& labels) {
  Graph g;
  const Vertex v = g.add_vertex("v");
  for (const auto& l : labels) g.add_edge(l, v, v);
  return g;
}

}  // namespace iwip
