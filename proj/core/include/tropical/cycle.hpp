#pragma once

#include "tropical/complex.hpp"
#include "tropical/lattice.hpp"
#include "tropical/polyhedron.hpp"

#include <string>
#include <vector>

namespace tropical {

/// Pure weighted polyhedral complex with rational multiplicities. Cells always form a
/// proper complex (intersections are common faces) and no cell has multiplicity zero.
/// Balancing is not assumed; check it with is_balanced().
class TropicalCycle {
 public:
  TropicalCycle() = default;

  /// The zero cycle; `dim` records the intended dimension when known (-1 otherwise).
  static TropicalCycle zero(std::size_t n, int dim = -1);
  static TropicalCycle ambient(std::size_t n, const Rational& mult = 1);
  static TropicalCycle linear_space(std::size_t n, const std::vector<IntVector>& basis, const Rational& mult = 1);
  /// Arbitrary overlapping cells; refined into a proper complex, overlaps add up.
  static TropicalCycle from_cells(std::size_t n, const std::vector<Polyhedron>& cells,
                                  const std::vector<Rational>& mults);
  static TropicalCycle from_weighted(std::size_t n, const std::vector<WeightedCell>& cells, int dim_if_zero = -1);
  /// Cells already known to form a proper complex; equal cells merge, zeros drop.
  static TropicalCycle from_proper_cells(std::size_t n, std::vector<Polyhedron> cells, std::vector<Rational> mults,
                                         int dim_if_zero = -1);

  std::size_t ambient_dim() const { return n_; }
  /// Dimension of the cells; for the zero cycle the recorded dimension (possibly -1).
  int dim() const { return dim_; }
  int codim() const { return dim_ < 0 ? -1 : static_cast<int>(n_) - dim_; }
  bool is_zero() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  const std::vector<Rational>& mults() const { return mults_; }
  bool is_fan() const;
  bool has_integer_multiplicities() const;
  PolyhedralComplex support() const { return PolyhedralComplex(n_, cells_); }

  /// Basis of the largest linear space contained in the lineality of every cell.
  std::vector<IntVector> lineality_basis() const;
  LatticeSubgroup lineality() const;

  bool support_contains(const RatVector& x) const;
  /// Multiplicity of the cell whose relative interior contains x, 0 if there is none.
  Rational multiplicity_at(const RatVector& x) const;

  TropicalCycle scaled(const Rational& s) const;
  TropicalCycle negated() const { return scaled(-1); }

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  int dim_ = -1;
  std::vector<Polyhedron> cells_;
  std::vector<Rational> mults_;
};

struct BalanceReport {
  bool balanced = true;
  std::vector<Polyhedron> failing_ridges;
};

/// Primitive generator of N_sigma / N_tau pointing into sigma (tau a facet of sigma).
IntVector lattice_normal(const Polyhedron& sigma, const Polyhedron& tau);

BalanceReport is_balanced(const TropicalCycle& x);
TropicalCycle link_cycle(const TropicalCycle& x, const RatVector& omega);
/// Cycle in R^n / L with lattice Z^n / N_L. The projection used is quotient_map(L).
TropicalCycle quotient_by_lineality(const TropicalCycle& x, const LatticeSubgroup& l);
/// Integer matrix of a surjection Z^n -> Z^(n - rank L) whose kernel is the saturation of L.
IntMatrix quotient_map(const LatticeSubgroup& l);
TropicalCycle cycle_sum(const TropicalCycle& x, const TropicalCycle& y);
TropicalCycle cartesian_product(const TropicalCycle& x, const TropicalCycle& y);
TropicalCycle pushforward(const IntMatrix& a, const TropicalCycle& x);
bool cycles_equal(const TropicalCycle& x, const TropicalCycle& y);
/// Multiplicity of the cell whose relative interior contains the origin (0 if none).
Rational origin_multiplicity(const TropicalCycle& x);
/// Cells translated by a vector (used for perturbed intersections).
TropicalCycle translated(const TropicalCycle& x, const RatVector& shift);
/// Adds the given directions to every cell, keeping multiplicities.
TropicalCycle plus_span(const TropicalCycle& x, const std::vector<IntVector>& directions);

/// A linear subspace described by normals: the common kernel of `normals`.
struct AvoidedSubspace {
  std::vector<IntVector> normals;
  static AvoidedSubspace from_span(std::size_t n, const std::vector<IntVector>& spanning);
  static AvoidedSubspace hyperplane(const IntVector& normal) { return {{normal}}; }
  bool contains(const RatVector& v) const;
};

struct GenericVector {
  RatVector v;
  std::vector<AvoidedSubspace> certificate;
  /// Re-checks v against every recorded subspace.
  bool verify() const;
};

/// First vector of the sequence (1, p, p^2, ...) over primes p = 2, 3, 5, ... avoiding
/// every given subspace. Throws PreconditionError if a subspace is the whole space.
GenericVector pick_generic_vector(std::size_t n, std::vector<AvoidedSubspace> avoid);

}  // namespace tropical
