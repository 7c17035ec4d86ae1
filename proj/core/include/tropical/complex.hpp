#pragma once

#include "tropical/polyhedron.hpp"

#include <vector>

namespace tropical {

struct WeightedCell {
  Polyhedron cell;
  Rational weight;
};

/// Splits cells along each other's hyperplanes until any two meet in a common face,
/// then merges equal cells by adding weights. Zero-weight cells are dropped when asked.
std::vector<WeightedCell> make_proper(const std::vector<WeightedCell>& cells, bool drop_zero = true);

/// Maximal cells only.
class PolyhedralComplex {
 public:
  PolyhedralComplex() = default;
  PolyhedralComplex(std::size_t ambient_dim, std::vector<Polyhedron> cells);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  bool is_fan() const;
  bool is_pure() const;
  /// -1 for an empty complex; the largest cell dimension otherwise.
  int dim() const;
  /// Pairwise intersections of cells are faces of both.
  bool is_proper() const;
  /// Codimension-one faces of maximal cells, deduplicated.
  std::vector<Polyhedron> ridges() const;
  bool support_contains(const RatVector& x) const;

 private:
  std::size_t n_ = 0;
  std::vector<Polyhedron> cells_;
};

/// {s ∩ t : s in X, t in Y}, nonempty and maximal under inclusion.
PolyhedralComplex common_refinement(const PolyhedralComplex& x, const PolyhedralComplex& y);
/// Proper complex whose support is the union of the two supports.
PolyhedralComplex union_refinement(const PolyhedralComplex& x, const PolyhedralComplex& y);
/// Refines a single complex into a proper one with the same support.
PolyhedralComplex refined(const PolyhedralComplex& x);

}  // namespace tropical
