#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwip/graph_map.hpp"

namespace iwip {

// Letter of the free group on x1..xn: id 2i is x_{i+1}, id 2i+1 its inverse.
struct Letter {
  int id = 0;
  constexpr Letter inverse() const { return Letter{id ^ 1}; }
  constexpr int generator() const { return id >> 1; }
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
std::string format_word(const Word& w);  // "x1 ~x2", "1" for the empty word

// Endomorphism of F_n given by the images of the generators.
struct FreeEndomorphism {
  std::vector<Word> images;

  Word apply(const Word& w) const;
  friend bool operator==(const FreeEndomorphism&, const FreeEndomorphism&) = default;
};

// this ∘ other; returns nullopt when an intermediate image passes max_letters.
std::optional<FreeEndomorphism> compose(const FreeEndomorphism& outer, const FreeEndomorphism& inner,
                                        std::size_t max_letters);

// True when phi is conjugation by some element, for phi an endomorphism.
bool is_inner(const FreeEndomorphism& phi);

// Identification of π₁(Γ, v1) with a free group: a maximal tree grown from v1
// by repeatedly taking the first positive edge with one endpoint in the tree;
// non-tree positive edges, in order, are the basis x1..xn.
class Pi1Marking {
 public:
  explicit Pi1Marking(std::shared_ptr<const Graph> graph, Vertex basepoint = Vertex{0});

  const Graph& graph() const { return *graph_; }
  Vertex basepoint() const { return basepoint_; }
  const std::vector<Edge>& tree() const { return tree_; }
  const std::vector<Edge>& basis_edges() const { return basis_; }
  int rank() const { return static_cast<int>(basis_.size()); }

  // Tree path from the basepoint to v.
  const EdgeWord& tree_path(Vertex v) const { return tree_path_[static_cast<std::size_t>(v.id)]; }
  // Closed path at the basepoint representing generator i.
  EdgeWord generator_loop(int i) const;
  // Reads a path as a reduced word by dropping tree edges.
  Word read(std::span<const Edge> path) const;
  // Loop at the basepoint representing a word.
  EdgeWord loop_of(const Word& w) const;

 private:
  std::shared_ptr<const Graph> graph_;
  Vertex basepoint_;
  std::vector<Edge> tree_;
  std::vector<Edge> basis_;
  std::vector<int> generator_of_;  // per positive edge index, -1 for tree edges
  std::vector<EdgeWord> tree_path_;
};

// Induced endomorphism of π₁(Γ, v1). When f moves the basepoint, the image
// loop is brought back along the tree path.
FreeEndomorphism pi1_automorphism(const GraphMap& f, const Pi1Marking& marking);

// True when inverse ∘ f induces an inner automorphism, so the two maps are
// mutually inverse homotopy equivalences.
bool verify_homotopy_equivalence(const GraphMap& f, const GraphMap& inverse, const Pi1Marking& marking);

}  // namespace iwip
