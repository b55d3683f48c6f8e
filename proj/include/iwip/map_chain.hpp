#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "iwip/gates.hpp"
#include "iwip/graph_map.hpp"
#include "iwip/matrix.hpp"

namespace iwip {

// Composite f_1 ∘ f_2 ∘ ... ∘ f_m kept as its factors. Maps built from many
// factors have edge images far too long to expand, so every derived quantity
// is computed factor by factor. Factor 0 is outermost (applied last).
class MapChain {
 public:
  MapChain() = default;  // no graph; assign before use
  explicit MapChain(std::shared_ptr<const Graph> graph);  // identity
  explicit MapChain(GraphMap f);
  MapChain(std::shared_ptr<const Graph> graph, std::vector<std::shared_ptr<const GraphMap>> factors);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  std::size_t factor_count() const { return factors_.size(); }
  const GraphMap& factor(std::size_t i) const { return *factors_[i]; }
  const std::vector<std::shared_ptr<const GraphMap>>& factors() const { return factors_; }

  // this ∘ inner
  MapChain then_after(const MapChain& inner) const;
  MapChain prepended(std::shared_ptr<const GraphMap> outer) const;
  MapChain power(int p) const;

  std::vector<Vertex> vertex_map() const;
  bool fixes_vertices() const;
  // Composite derivative on directed edges; throws MapError on a contracted edge.
  std::vector<Edge> direction_map() const;
  // Support of the transition matrix, by boolean products of the factors.
  SupportMatrix support_matrix() const;
  // Transition matrix in floating point; exact while entries stay below 2^53.
  DynMatrix<double> transition_weights() const;
  // Length of each positive edge image, saturated in floating point.
  std::vector<double> image_lengths() const;
  // Turns crossed by the untightened image of some edge, degenerate ones included.
  TurnSet crossed_turns() const;
  // Expanded map, or nullopt when some image would exceed max_letters.
  std::optional<GraphMap> materialize(std::size_t max_letters) const;

  // Untightened image of a word, or nullopt when it would exceed max_letters.
  std::optional<EdgeWord> apply(std::span<const Edge> w, std::size_t max_letters) const;

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<std::shared_ptr<const GraphMap>> factors_;
};

MapChain compose(const MapChain& outer, const MapChain& inner);

}  // namespace iwip
