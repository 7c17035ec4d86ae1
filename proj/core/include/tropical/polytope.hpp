#pragma once

#include "tropical/cycle.hpp"
#include "tropical/polyhedron.hpp"

#include <vector>

namespace tropical {

/// Nonempty convex hull of finitely many rational points; vertices are irredundant and sorted.
class RationalPolytope {
 public:
  RationalPolytope() = default;
  /// Throws ValidationError on an empty point list or a point of the wrong length.
  RationalPolytope(std::size_t n, const std::vector<RatVector>& points);
  /// Throws ValidationError if p is empty or unbounded.
  explicit RationalPolytope(const Polyhedron& p);

  static RationalPolytope simplex(std::size_t n, const Rational& scale = 1);
  static RationalPolytope segment(const RatVector& a, const RatVector& b);
  static RationalPolytope cube(std::size_t n);

  std::size_t ambient_dim() const { return p_.ambient_dim(); }
  int dim() const { return p_.dim(); }
  const std::vector<RatVector>& vertices() const { return p_.vertices(); }
  const Polyhedron& polyhedron() const { return p_; }
  /// Edges as pairs of vertices.
  std::vector<std::pair<RatVector, RatVector>> edges() const;

  RationalPolytope dilated(const Rational& s) const;
  RationalPolytope translated(const RatVector& shift) const;

  bool operator==(const RationalPolytope& o) const { return p_ == o.p_; }

 private:
  Polyhedron p_;
};

RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q);
RationalPolytope convex_union(const RationalPolytope& p, const RationalPolytope& q);
/// Throws ValidationError if the polytopes are disjoint.
RationalPolytope intersect(const RationalPolytope& p, const RationalPolytope& q);

/// Face of P where ω . x is maximal.
RationalPolytope support_face(const RationalPolytope& p, const RatVector& omega);

/// Normal cone {ω : the ω-maximal face contains f} of a face f of P.
Polyhedron normal_cone(const RationalPolytope& p, const RatVector& relint_point_of_face);

/// Lattice length of the segment [a, b] measured along its primitive direction.
Rational lattice_length(const RatVector& a, const RatVector& b);

/// Codimension-one skeleton of the normal fan, weighted by lattice lengths of edges.
/// A point gives the zero cycle.
TropicalCycle tropical_hypersurface(const RationalPolytope& p);

/// Origin multiplicity of the dim(P)-th stable power of the hypersurface.
Rational normalized_volume(const RationalPolytope& p);
/// Requires exactly ambient_dim polytopes.
Rational mixed_volume(const std::vector<RationalPolytope>& polytopes);
/// Coefficient of prod λ_i^{a_i} in the normalized volume of sum λ_i P_i.
Rational volume_polynomial_coefficient(const std::vector<RationalPolytope>& polytopes,
                                       const std::vector<unsigned>& exponents);

/// Orthogonal projection of P onto the Q-span of L.
RationalPolytope projected_polytope(const RationalPolytope& p, const LatticeSubgroup& l);
/// (T(P) . L) + L^⊥.
TropicalCycle project_hypersurface(const RationalPolytope& p, const LatticeSubgroup& l);

/// Whether P ∪ Q is convex.
bool union_is_convex(const RationalPolytope& p, const RationalPolytope& q);

struct ValuationReport {
  bool power_identity = false;    ///< T^k(P∪Q) ⊕ T^k(P∩Q) = T^k(P) ⊕ T^k(Q)
  bool product_identity = false;  ///< T(P∪Q) . T(P∩Q) = T(P) . T(Q)
  bool holds() const { return power_identity && product_identity; }
};

/// Throws PreconditionError if P ∪ Q is not convex.
ValuationReport valuation_check(const RationalPolytope& p, const RationalPolytope& q, unsigned k);

}  // namespace tropical
