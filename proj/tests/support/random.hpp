#pragma once

#include "oracles.hpp"

#include "tropical/linalg.hpp"
#include "tropical/polytope.hpp"

#include <random>

namespace testing_support {

using tropical::Integer;
using tropical::IntVector;
using tropical::Rational;
using tropical::RationalPolytope;
using tropical::RatVector;

inline long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline RatVector random_point(std::mt19937& rng, std::size_t d, long lo, long hi) {
  RatVector p;
  for (std::size_t i = 0; i < d; ++i) p.emplace_back(uniform(rng, lo, hi));
  return p;
}

inline IntVector random_int_vector(std::mt19937& rng, std::size_t d, long lo, long hi) {
  IntVector p;
  for (std::size_t i = 0; i < d; ++i) p.emplace_back(uniform(rng, lo, hi));
  return p;
}

/// Full-dimensional lattice polytope with at most `points` random generating points.
inline RationalPolytope random_polytope(std::mt19937& rng, std::size_t d, std::size_t points, long range = 3) {
  for (;;) {
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < points; ++i) pts.push_back(random_point(rng, d, 0, range));
    RationalPolytope p(d, pts);
    if (p.dim() == static_cast<int>(d)) return p;
  }
}

/// Lattice polytope of any dimension >= 1.
inline RationalPolytope random_positive_dim_polytope(std::mt19937& rng, std::size_t d, std::size_t points, long range = 3) {
  for (;;) {
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < points; ++i) pts.push_back(random_point(rng, d, 0, range));
    RationalPolytope p(d, pts);
    if (p.dim() >= 1) return p;
  }
}

inline std::vector<oracle::Point> to_oracle(const RationalPolytope& p) {
  std::vector<oracle::Point> out;
  for (const auto& v : p.vertices()) {
    oracle::Point q;
    for (const auto& x : v) q.emplace_back(x);
    out.push_back(std::move(q));
  }
  return out;
}

/// Generators of a random subgroup of Z^n of full rank.
inline std::vector<IntVector> random_full_rank_generators(std::mt19937& rng, std::size_t n, long range = 4) {
  for (;;) {
    std::vector<IntVector> g;
    const std::size_t count = n + static_cast<std::size_t>(uniform(rng, 0, 1));
    for (std::size_t i = 0; i < count; ++i) g.push_back(random_int_vector(rng, n, -range, range));
    if (tropical::linalg::rank(g) == n) return g;
  }
}

}  // namespace testing_support
