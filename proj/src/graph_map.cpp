#include "iwip/graph_map.hpp"

#include <algorithm>

namespace iwip {

GraphMap::GraphMap(std::shared_ptr<const Graph> graph, std::vector<Vertex> vertex_image,
                   std::vector<EdgeWord> positive_images)
    : graph_(std::move(graph)), vertex_image_(std::move(vertex_image)) {
  const Graph& g = *graph_;
  if (static_cast<int>(vertex_image_.size()) != g.vertex_count())
    throw MapError("vertex image count mismatch");
  if (static_cast<int>(positive_images.size()) != g.edge_count())
    throw MapError("edge image count mismatch");
  for (Vertex v : vertex_image_)
    if (v.id < 0 || v.id >= g.vertex_count()) throw MapError("vertex image out of range");
  images_.resize(static_cast<std::size_t>(g.directed_count()));
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge e = Edge::positive_of(k);
    EdgeWord& img = positive_images[static_cast<std::size_t>(k)];
    const Path p{image(g.init(e)), img};
    if (!is_path(g, p) || end_vertex(g, p) != image(g.terminal(e)))
      throw MapError("image of " + g.token(e) + " is not a path between the vertex images");
    images_[static_cast<std::size_t>(e.reversed().id)] = reversed(img);
    images_[static_cast<std::size_t>(e.id)] = std::move(img);
  }
}

GraphMap GraphMap::identity(std::shared_ptr<const Graph> graph) {
  return with_overrides(std::move(graph), {});
}

GraphMap GraphMap::with_overrides(std::shared_ptr<const Graph> graph,
                                  const std::vector<std::pair<Edge, EdgeWord>>& overrides) {
  std::vector<Vertex> vertices(static_cast<std::size_t>(graph->vertex_count()));
  for (int v = 0; v < graph->vertex_count(); ++v) vertices[static_cast<std::size_t>(v)] = Vertex{v};
  std::vector<EdgeWord> images(static_cast<std::size_t>(graph->edge_count()));
  for (int k = 0; k < graph->edge_count(); ++k) images[static_cast<std::size_t>(k)] = {Edge::positive_of(k)};
  for (const auto& [e, w] : overrides)
    images[static_cast<std::size_t>(e.index())] = e.positive() ? w : reversed(w);
  return GraphMap(std::move(graph), std::move(vertices), std::move(images));
}

void GraphMap::apply_into(std::span<const Edge> w, EdgeWord& out) const {
  for (Edge e : w) {
    const auto img = image(e);
    out.insert(out.end(), img.begin(), img.end());
  }
}

EdgeWord GraphMap::apply(std::span<const Edge> w) const {
  EdgeWord out;
  apply_into(w, out);
  return out;
}

Path GraphMap::apply(const Path& p) const { return Path{image(p.start), apply(p.edges)}; }

bool GraphMap::fixes_vertices() const {
  for (std::size_t v = 0; v < vertex_image_.size(); ++v)
    if (vertex_image_[v].id != static_cast<int>(v)) return false;
  return true;
}

std::size_t GraphMap::max_image_length() const {
  std::size_t m = 0;
  for (const auto& img : images_) m = std::max(m, img.size());
  return m;
}

std::size_t GraphMap::total_image_length() const {
  std::size_t t = 0;
  for (std::size_t id = 0; id < images_.size(); id += 2) t += images_[id].size();
  return t;
}

GraphMap compose_maps(const GraphMap& f, const GraphMap& g) {
  if (f.graph_ptr() != g.graph_ptr()) throw MapError("composing maps on different graphs");
  const Graph& gr = f.graph();
  std::vector<Vertex> vertices(static_cast<std::size_t>(gr.vertex_count()));
  for (int v = 0; v < gr.vertex_count(); ++v) vertices[static_cast<std::size_t>(v)] = f.image(g.image(Vertex{v}));
  std::vector<EdgeWord> images(static_cast<std::size_t>(gr.edge_count()));
  for (int k = 0; k < gr.edge_count(); ++k)
    images[static_cast<std::size_t>(k)] = f.apply(g.image(Edge::positive_of(k)));
  return GraphMap(f.graph_ptr(), std::move(vertices), std::move(images));
}

GraphMap tightened(const GraphMap& f) {
  const Graph& gr = f.graph();
  std::vector<EdgeWord> images(static_cast<std::size_t>(gr.edge_count()));
  for (int k = 0; k < gr.edge_count(); ++k)
    images[static_cast<std::size_t>(k)] = tighten(f.image(Edge::positive_of(k)));
  return GraphMap(f.graph_ptr(), f.vertex_images(), std::move(images));
}

}  // namespace iwip
