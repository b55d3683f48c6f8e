#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>

#include "iwip/graph_map.hpp"

namespace iwip {

template <typename Scalar>
using DynMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using TransitionMatrix = DynMatrix<std::int64_t>;
using SupportMatrix = DynMatrix<std::uint8_t>;

// Entry (i, j) counts the occurrences of edge i, in either orientation, in
// the image of edge j. Exact for explicit maps.
template <typename Scalar = std::int64_t>
DynMatrix<Scalar> transition_matrix(const GraphMap& f) {
  const int n = f.graph().edge_count();
  DynMatrix<Scalar> m = DynMatrix<Scalar>::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (Edge x : f.image(Edge::positive_of(j))) m(x.index(), j) += Scalar(1);
  return m;
}

template <typename Derived>
SupportMatrix support(const Eigen::MatrixBase<Derived>& m) {
  return (m.array() != typename Derived::Scalar(0)).template cast<std::uint8_t>();
}

// Boolean product of two 0/1 matrices.
template <typename A, typename B>
SupportMatrix boolean_product(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  const DynMatrix<int> p = a.template cast<int>() * b.template cast<int>();
  return support(p);
}

template <typename Derived>
bool is_positive(const Eigen::MatrixBase<Derived>& m) {
  return m.size() > 0 && (m.array() > typename Derived::Scalar(0)).all();
}

// Wielandt's bound: a primitive n×n matrix has a positive power at or below
// (n-1)^2 + 1.
constexpr int wielandt_bound(int n) { return (n - 1) * (n - 1) + 1; }

struct PrimitivityResult {
  bool primitive = false;
  std::optional<int> witness;  // least t with M^t > 0
};

template <typename Derived>
PrimitivityResult is_primitive(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return {};
  const SupportMatrix base = support(m);
  SupportMatrix power = base;
  const int bound = wielandt_bound(static_cast<int>(m.rows()));
  for (int t = 1; t <= bound; ++t) {
    if (is_positive(power)) return {true, t};
    power = boolean_product(power, base);
  }
  return {};
}

}  // namespace iwip
