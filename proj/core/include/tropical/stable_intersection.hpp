#pragma once

#include "tropical/complex.hpp"
#include "tropical/cycle.hpp"

#include <vector>

namespace tropical {

struct ContributingPair {
  std::size_t sigma = 0;  ///< cell index in X
  std::size_t tau = 0;    ///< cell index in Y
  Integer index;          ///< [Z^n : N_sigma + N_tau]
  Rational term;          ///< mult_sigma * mult_tau * index
};

struct IntersectionFace {
  Polyhedron cell;
  Rational multiplicity;
  std::vector<ContributingPair> pairs;
};

struct IntersectionReport {
  TropicalCycle result;
  GenericVector generic_vector;
  /// One entry per candidate face of the expected dimension, including faces whose terms cancel.
  std::vector<IntersectionFace> faces;
};

/// Union of sigma ∩ tau over facet pairs whose lattice sum has full rank, kept at the
/// expected dimension.
PolyhedralComplex stable_support(const TropicalCycle& x, const TropicalCycle& y);

IntersectionReport stable_intersection_report(const TropicalCycle& x, const TropicalCycle& y);
TropicalCycle stable_intersection(const TropicalCycle& x, const TropicalCycle& y);
TropicalCycle stable_power(const TropicalCycle& x, unsigned k);
/// (X × Y) · Δ mapped back by (x, y) -> x.
TropicalCycle diagonal_intersection(const TropicalCycle& x, const TropicalCycle& y);

struct PerturbationResult {
  /// X ∩ (Y + ε v) with transverse multiplicities.
  TropicalCycle perturbed;
  /// Limit for ε -> 0.
  TropicalCycle limit;
};

/// A vector generic for the perturbation: avoids span F + span G for every pair of
/// faces whose spans do not fill the space.
GenericVector oracle_generic_vector(const TropicalCycle& x, const TropicalCycle& y);

/// Transverse intersection of X with Y + ε v and its limit. Both cycles must be fans.
/// Throws PreconditionError if some pair of cells meets non-transversally. When
/// `check_stability` is set the limit is recomputed at ε/2 and compared.
PerturbationResult perturbation_oracle(const TropicalCycle& x, const TropicalCycle& y, const GenericVector& v,
                                       const Rational& epsilon, bool check_stability = true);

}  // namespace tropical
