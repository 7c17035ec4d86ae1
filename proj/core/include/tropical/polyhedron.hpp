#pragma once

#include "tropical/lattice.hpp"
#include "tropical/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropical {

/// normal . x <= rhs (or == rhs when used as an equation). Stored primitive.
struct Halfspace {
  IntVector normal;
  Integer rhs;
  bool operator==(const Halfspace&) const = default;
};

/// Build a primitive integer constraint from rational data, preserving orientation.
Halfspace make_halfspace(const RatVector& normal, const Rational& rhs);

struct HRep {
  std::size_t ambient_dim = 0;
  std::vector<Halfspace> inequalities;
  std::vector<Halfspace> equations;
};

struct VRep {
  std::size_t ambient_dim = 0;
  std::vector<RatVector> vertices;
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

/// Rational polyhedron with both representations kept in canonical form:
/// facet inequalities reduced modulo the equations, lineality in RREF, vertices and
/// rays reduced modulo the lineality and sorted. Two polyhedra are equal as sets
/// iff they compare equal.
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_h(std::size_t n, const std::vector<Halfspace>& inequalities,
                           const std::vector<Halfspace>& equations = {});
  static Polyhedron from_v(std::size_t n, const std::vector<RatVector>& vertices,
                           const std::vector<IntVector>& rays = {},
                           const std::vector<IntVector>& lineality = {});
  /// Cone with apex 0.
  static Polyhedron cone(std::size_t n, const std::vector<IntVector>& rays,
                         const std::vector<IntVector>& lineality = {});
  static Polyhedron empty(std::size_t n);
  static Polyhedron whole(std::size_t n);
  static Polyhedron point(const RatVector& p);
  static Polyhedron linear_space(std::size_t n, const std::vector<IntVector>& basis);

  std::size_t ambient_dim() const { return n_; }
  bool is_empty() const { return empty_; }
  /// -1 for the empty polyhedron.
  int dim() const;
  std::size_t lineality_dim() const { return lineality_.size(); }
  bool is_bounded() const { return !empty_ && rays_.empty() && lineality_.empty(); }
  /// Nonempty and equal to its own recession cone.
  bool is_cone() const;
  bool is_linear_space() const { return is_cone() && rays_.empty(); }

  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  const std::vector<Halfspace>& inequalities() const { return ineqs_; }
  const std::vector<Halfspace>& equations() const { return eqs_; }
  HRep h_rep() const { return {n_, ineqs_, eqs_}; }
  VRep v_rep() const { return {n_, vertices_, rays_, lineality_}; }

  bool contains(const RatVector& x) const;
  bool contains(const Polyhedron& other) const;
  bool in_relative_interior(const RatVector& x) const;
  /// A point of the relative interior (barycenter of vertices plus the sum of rays).
  RatVector relative_interior_point() const;
  /// Canonical basis of the linear space parallel to the affine hull.
  std::vector<IntVector> direction_basis() const;
  /// Z^n intersected with the direction space.
  LatticeSubgroup direction_lattice() const;

  /// Indices of inequalities tight at x.
  std::vector<std::size_t> tight_inequalities(const RatVector& x) const;
  /// The face cut out by making the given inequalities tight.
  Polyhedron face(const std::vector<std::size_t>& tight) const;
  /// Smallest face containing x (x must lie in the polyhedron).
  Polyhedron minimal_face(const RatVector& x) const;
  std::vector<Polyhedron> facets() const;
  /// All nonempty faces grouped by dimension, from lineality_dim() up to dim().
  std::vector<std::vector<Polyhedron>> face_lattice() const;

  /// Cone of feasible directions at x. Throws PreconditionError if x is not in the polyhedron.
  Polyhedron link_at(const RatVector& x) const;
  Polyhedron recession_cone() const;
  Polyhedron translated(const RatVector& shift) const;
  /// Image under x -> A x.
  Polyhedron image(const IntMatrix& a) const;
  /// Image under x -> A x with rational entries.
  Polyhedron image(const std::vector<RatVector>& rows) const;
  /// Adds the given directions to the lineality space.
  Polyhedron plus_span(const std::vector<IntVector>& directions) const;

  int compare(const Polyhedron& other) const;
  bool operator==(const Polyhedron& other) const { return compare(other) == 0; }
  bool operator!=(const Polyhedron& other) const { return compare(other) != 0; }
  bool operator<(const Polyhedron& other) const { return compare(other) < 0; }

  std::string to_string() const;

 private:
  // Homogeneous coordinates: (x_1..x_n, t), so x lies in P iff (x, 1) lies in the cone.
  struct Homog {
    std::vector<IntVector> ineqs;  // y . g >= 0
    std::vector<IntVector> eqs;
    std::vector<IntVector> gens;  // extreme rays of the cone (vertices have t > 0)
    std::vector<IntVector> lin;   // lineality (t = 0)
  };
  static Polyhedron finalize(std::size_t n, Homog h, bool gens_extreme, bool ineqs_facets);
  Homog homog() const;

  std::size_t n_ = 0;
  bool empty_ = true;
  std::vector<RatVector> vertices_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<Halfspace> ineqs_;
  std::vector<Halfspace> eqs_;
};

HRep to_h(const VRep& v);
VRep to_v(const HRep& h);
/// Returns the polyhedron with both representations; exists for symmetry with to_h/to_v.
Polyhedron dual_convert(const Polyhedron& p);

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);
Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);
Polyhedron negated(const Polyhedron& p);
Polyhedron cartesian_product(const Polyhedron& p, const Polyhedron& q);
/// p is a face of q.
bool is_face(const Polyhedron& p, const Polyhedron& q);
/// Decides v in p - q by exact LP.
bool membership_in_sum(const Polyhedron& p, const Polyhedron& q, const RatVector& v);

struct PolyhedronLess {
  bool operator()(const Polyhedron& a, const Polyhedron& b) const { return a.compare(b) < 0; }
};

}  // namespace tropical
