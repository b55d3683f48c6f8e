#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iwip {

// Directed edge. The positive orientation of edge k has id 2k and its
// reverse has id 2k+1, so the involution is a bit flip.
struct Edge {
  int id = 0;

  constexpr Edge reversed() const { return Edge{id ^ 1}; }
  constexpr bool positive() const { return (id & 1) == 0; }
  constexpr int index() const { return id >> 1; }
  constexpr Edge as_positive() const { return Edge{id & ~1}; }
  static constexpr Edge positive_of(int index) { return Edge{2 * index}; }

  friend constexpr auto operator<=>(Edge, Edge) = default;
};

struct Vertex {
  int id = 0;
  friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

using EdgeWord = std::vector<Edge>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite graph with an edge involution. Vertices and edges are appended and
// never removed, so ids stay stable.
class Graph {
 public:
  Vertex add_vertex(std::string name);
  Edge add_edge(std::string label, Vertex from, Vertex to);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(labels_.size()); }
  int directed_count() const { return 2 * edge_count(); }

  Vertex init(Edge e) const;
  Vertex terminal(Edge e) const { return init(e.reversed()); }

  const std::string& vertex_name(Vertex v) const;
  const std::string& label(Edge e) const;
  // "c1" for a positive edge, "~c1" for its reverse.
  std::string token(Edge e) const;
  std::optional<Edge> find_edge(std::string_view token) const;
  std::optional<Vertex> find_vertex(std::string_view name) const;

  // Directed edges starting at v, ordered by id.
  const std::vector<Edge>& outgoing(Vertex v) const;
  int valence(Vertex v) const { return static_cast<int>(outgoing(v).size()); }

  // Rank of the fundamental group when the graph is connected.
  int rank() const { return edge_count() - vertex_count() + 1; }

  std::vector<Edge> positive_edges() const;

 private:
  void check(Vertex v) const;
  void check(Edge e) const;

  std::vector<std::string> vertex_names_;
  std::vector<std::string> labels_;
  std::vector<Vertex> from_;
  std::vector<Vertex> to_;
  std::vector<std::vector<Edge>> outgoing_;
};

// Edge path. The start vertex is kept so that trivial paths are meaningful.
struct Path {
  Vertex start;
  EdgeWord edges;

  bool empty() const { return edges.empty(); }
  std::size_t size() const { return edges.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

bool is_path(const Graph& g, const Path& p);
Vertex end_vertex(const Graph& g, const Path& p);
EdgeWord reversed(std::span<const Edge> w);
Path reversed(const Graph& g, const Path& p);
bool is_reduced(std::span<const Edge> w);

// Free reduction: cancels every adjacent pair e, ~e.
EdgeWord tighten(std::span<const Edge> w);
Path tighten(const Path& p);

// Cyclic reduction of a closed path: tighten, then cancel the ends against
// each other. The result is a cyclically reduced word.
EdgeWord tighten_cyclic(std::span<const Edge> w);
// True when b is a cyclic rotation of a.
bool cyclically_equal(std::span<const Edge> a, std::span<const Edge> b);

std::string format_word(const Graph& g, std::span<const Edge> w);
// Parses a whitespace separated token list; throws GraphError on unknown tokens.
EdgeWord parse_word(const Graph& g, std::string_view text);

struct GraphDiagnostics {
  bool connected = true;
  bool endpoints_valid = true;
  std::vector<Vertex> low_valence;  // valence 1 or 2
  int rank = 0;

  bool ok() const { return connected && endpoints_valid && low_valence.empty(); }
};

GraphDiagnostics validate_graph(const Graph& g);

// Rose with one vertex "v" and one loop per label.
Graph make_rose(const std::vector<std::string>& labels);

}  // namespace iwip
