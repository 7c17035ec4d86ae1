#pragma once

#include "tropical/cycle.hpp"
#include "tropical/polytope.hpp"

namespace testing_support {

inline tropical::RatVector rv(std::initializer_list<long> xs) {
  tropical::RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline tropical::IntVector iv(std::initializer_list<long> xs) {
  tropical::IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline tropical::Polyhedron ray(const tropical::IntVector& r) { return tropical::Polyhedron::cone(r.size(), {r}); }

/// Fan with one ray per generator and the given multiplicities.
inline tropical::TropicalCycle ray_fan(std::size_t n, const std::vector<tropical::IntVector>& rays,
                                       const std::vector<tropical::Rational>& mults) {
  std::vector<tropical::Polyhedron> cells;
  for (const auto& r : rays) cells.push_back(ray(r));
  return tropical::TropicalCycle::from_cells(n, cells, mults);
}

/// Rays -e1, -e2, e1+e2.
inline tropical::TropicalCycle tropical_line(const tropical::Rational& m = 1) {
  return ray_fan(2, {iv({-1, 0}), iv({0, -1}), iv({1, 1})}, {m, m, m});
}

inline tropical::TropicalCycle origin_point(std::size_t n, const tropical::Rational& m = 1) {
  return tropical::TropicalCycle::from_cells(n, {tropical::Polyhedron::point(tropical::RatVector(n))}, {m});
}

inline tropical::TropicalCycle axis(std::size_t n, std::size_t i, const tropical::Rational& m = 1) {
  tropical::IntVector e(n, tropical::Integer(0));
  e[i] = 1;
  return tropical::TropicalCycle::linear_space(n, {e}, m);
}

}  // namespace testing_support
