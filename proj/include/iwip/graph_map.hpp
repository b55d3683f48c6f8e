#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "iwip/graph.hpp"

namespace iwip {

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph self-map sending vertices to vertices and edges to edge paths.
// Images are stored for both orientations. Contracted edges (empty images)
// are permitted here and reported by the train track checks.
class GraphMap {
 public:
  // positive_images[k] is the image of the positive edge k. Throws MapError
  // when an image is not a path from f(init e) to f(term e).
  GraphMap(std::shared_ptr<const Graph> graph, std::vector<Vertex> vertex_image,
           std::vector<EdgeWord> positive_images);

  static GraphMap identity(std::shared_ptr<const Graph> graph);
  // Vertex-fixing map; edges not listed are sent to themselves.
  static GraphMap with_overrides(std::shared_ptr<const Graph> graph,
                                 const std::vector<std::pair<Edge, EdgeWord>>& overrides);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }

  std::span<const Edge> image(Edge e) const { return images_[static_cast<std::size_t>(e.id)]; }
  Vertex image(Vertex v) const { return vertex_image_[static_cast<std::size_t>(v.id)]; }
  const std::vector<Vertex>& vertex_images() const { return vertex_image_; }

  // Letterwise image without tightening.
  EdgeWord apply(std::span<const Edge> w) const;
  void apply_into(std::span<const Edge> w, EdgeWord& out) const;
  Path apply(const Path& p) const;

  bool fixes_vertices() const;
  std::size_t max_image_length() const;
  std::size_t total_image_length() const;

  friend bool operator==(const GraphMap& a, const GraphMap& b) {
    return a.graph_ == b.graph_ && a.vertex_image_ == b.vertex_image_ && a.images_ == b.images_;
  }

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<Vertex> vertex_image_;
  std::vector<EdgeWord> images_;
};

// f ∘ g without tightening.
GraphMap compose_maps(const GraphMap& f, const GraphMap& g);
// Same map with every edge image freely reduced.
GraphMap tightened(const GraphMap& f);

}  // namespace iwip
