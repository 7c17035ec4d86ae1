#pragma once

#include "tropical/connectivity.hpp"
#include "tropical/cycle.hpp"
#include "tropical/polytope.hpp"
#include "tropical/polytope_algebra.hpp"
#include "tropical/stable_intersection.hpp"

#include <string>
#include <string_view>

// JSON documents. Rationals are written as "p/q" strings (integers as "p"); readers
// also accept plain JSON integers. Writers are deterministic: keys sorted, cells sorted.
namespace tropical::io {

/// {"ambient_dim", "dimension", "lineality": [...], "rays": [...],
///  "cones": [{"rays": [indices], "multiplicity": "p/q"}]}. Fans only.
std::string write_cycle(const TropicalCycle& x);
/// Overlapping cones are refined and their multiplicities added.
TropicalCycle read_cycle(std::string_view text);

/// {"ambient_dim", "vertices": [[...], ...]}
std::string write_polytope(const RationalPolytope& p);
RationalPolytope read_polytope(std::string_view text);

/// {"rows", "cols", "entries": [[...], ...]}
std::string write_matrix(const IntMatrix& a);
IntMatrix read_matrix(std::string_view text);

/// {"ambient_dim", "rays": [...], "cones": [[indices], ...]}
std::string write_fan(const ReferenceFan& f);
ReferenceFan read_fan(std::string_view text);

std::string write_balance_report(const BalanceReport& r);
std::string write_intersection_report(const IntersectionReport& r);
std::string write_connectivity_report(const ConnectivityReport& r);
std::string write_decomposition(const PowerDecomposition& d, const HypersurfaceBasis& b);
std::string write_example_6_2(const Example62Report& r);
std::string write_rational(const Rational& q);
std::string write_error(const std::string& category, const std::string& message);

}  // namespace tropical::io
