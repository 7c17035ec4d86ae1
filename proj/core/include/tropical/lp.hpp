#pragma once

#include "tropical/numeric.hpp"

#include <vector>

// Exact linear programming over Q (dense two-phase simplex, Bland's rule).
namespace tropical::lp {

enum class Status { optimal, infeasible, unbounded };

struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<RatVector> le_rows;  // row . x <= rhs
  RatVector le_rhs;
  std::vector<RatVector> eq_rows;  // row . x == rhs
  RatVector eq_rhs;
  /// Per-variable sign constraint; empty means every variable is free.
  std::vector<bool> nonnegative;
  /// Maximized. Empty means pure feasibility.
  RatVector objective;

  explicit LinearProgram(std::size_t n = 0) : num_vars(n) {}
  void add_le(RatVector row, Rational rhs);
  void add_ge(RatVector row, const Rational& rhs);
  void add_eq(RatVector row, Rational rhs);
};

struct Solution {
  Status status = Status::infeasible;
  RatVector x;
  Rational value;
};

Solution solve(const LinearProgram& problem);
bool feasible(const LinearProgram& problem);

}  // namespace tropical::lp
