#pragma once

#include "tropical/cycle.hpp"
#include "tropical/polytope.hpp"

#include <vector>

namespace tropical {

/// Graded element 1 ⊕ T^1 ⊕ ... ⊕ T^n; grade k is a cycle of codimension k (or zero).
class AlgebraElement {
 public:
  AlgebraElement() = default;
  /// Throws DimensionMismatch if the number of grades is not n + 1 or a grade has the wrong codimension.
  AlgebraElement(std::size_t n, std::vector<TropicalCycle> grades);

  static AlgebraElement zero(std::size_t n);
  static AlgebraElement identity(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  const TropicalCycle& grade(std::size_t k) const { return grades_.at(k); }
  const std::vector<TropicalCycle>& grades() const { return grades_; }
  bool is_zero() const;

 private:
  std::size_t n_ = 0;
  std::vector<TropicalCycle> grades_;
};

AlgebraElement phi(const RationalPolytope& p);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const Rational& s);
AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement power(const AlgebraElement& a, unsigned k);
/// Grade-wise cycles_equal.
bool elements_equal(const AlgebraElement& a, const AlgebraElement& b);
/// Requires grade 0 to be the ambient space with multiplicity 1.
AlgebraElement log_element(const AlgebraElement& a);
/// Requires grade 0 to vanish.
AlgebraElement exp_element(const AlgebraElement& z);

/// Complete simplicial fan given by rays and maximal cones (each a list of n ray indices).
struct ReferenceFan {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> cones;

  /// Normal fan of a full-dimensional simple polytope.
  static ReferenceFan of_simple_polytope(const RationalPolytope& p);
  /// Throws ValidationError unless the fan is simplicial and complete.
  void validate() const;
  /// Cones of dimension n - k as sorted ray index sets.
  std::vector<std::vector<std::size_t>> cones_of_codim(std::size_t k) const;
  Polyhedron cone(const std::vector<std::size_t>& ray_indices) const;
};

struct HypersurfaceBasis {
  ReferenceFan fan;
  /// Codimension-one cones of the fan, in the order used by the weight vectors.
  std::vector<std::vector<std::size_t>> walls;
  std::vector<RatVector> weights;
  std::vector<TropicalCycle> cycles;
  /// Polytopes P_i with T(P_i) = cycles[i].
  std::vector<RationalPolytope> polytopes;
};

/// Throws PreconditionError if the fan carries no strictly positive balanced wall weights.
HypersurfaceBasis build_hypersurface_basis(const ReferenceFan& fan);

struct PowerDecomposition {
  /// Each term is a multiset of basis indices (sorted).
  std::vector<std::vector<std::size_t>> terms;
  std::vector<Rational> coefficients;
};

/// Expresses x as a combination of products of basis cycles; throws ValidationError if impossible.
PowerDecomposition decompose_into_powers(const TropicalCycle& x, const HypersurfaceBasis& basis);
TropicalCycle recombine(const PowerDecomposition& d, const HypersurfaceBasis& basis);

}  // namespace tropical
