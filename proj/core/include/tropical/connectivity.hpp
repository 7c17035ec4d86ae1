#pragma once

#include "tropical/complex.hpp"
#include "tropical/cycle.hpp"

#include <vector>

namespace tropical {

/// Facets of a pure complex; two facets are adjacent when they share a ridge.
struct FacetGraph {
  std::vector<Polyhedron> facets;
  std::vector<std::vector<std::size_t>> adjacency;

  /// Refines the complex first so that intersections are faces. Throws ValidationError if not pure.
  static FacetGraph build(const PolyhedralComplex& x);
  /// Connected components as sorted lists of facet indices.
  std::vector<std::vector<std::size_t>> components() const;
};

struct ConnectivityReport {
  bool connected = true;
  std::vector<std::vector<std::size_t>> components;
  std::vector<Polyhedron> facets;
};

ConnectivityReport is_connected_codim1(const PolyhedralComplex& x);
ConnectivityReport is_connected_codim1(const TropicalCycle& x);

/// Facets of the union of several pure complexes of equal dimension.
PolyhedralComplex union_support(const std::vector<PolyhedralComplex>& parts);

struct Example62Report {
  TropicalCycle t1, t2, h, t1h, t2h;
  bool t1_connected = false;
  bool t2_connected = false;
  bool union_connected = false;
  bool union_contains_negative_quadrant = false;
  /// Whether supp(T1 . H) ∩ supp(T2 . H) is exactly the origin.
  bool slice_intersection_is_origin = false;
  std::vector<Polyhedron> slice_intersection;
  bool sliced_union_disconnected = false;
  std::size_t sliced_union_components = 0;

  bool all_claims_hold() const;
};

Example62Report example_6_2();

}  // namespace tropical
