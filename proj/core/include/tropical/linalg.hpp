#pragma once

#include "tropical/numeric.hpp"

#include <optional>
#include <vector>

// Exact dense linear algebra over Q on row-vector lists.
namespace tropical::linalg {

std::size_t rank(const std::vector<IntVector>& vectors);
std::size_t rank(const std::vector<RatVector>& vectors);

/// Reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(std::vector<RatVector>& rows);

/// Integer basis (primitive vectors) of {x in Q^dim : r.x = 0 for all rows r}.
std::vector<IntVector> kernel(const std::vector<IntVector>& rows, std::size_t dim);
std::vector<IntVector> kernel(const std::vector<RatVector>& rows, std::size_t dim);

/// Canonical integer basis of the Q-span of `vectors`: RREF rows scaled to primitive.
std::vector<IntVector> canonical_span_basis(const std::vector<IntVector>& vectors, std::size_t dim);

bool in_span(const std::vector<IntVector>& vectors, const IntVector& v);
bool in_span(const std::vector<IntVector>& vectors, const RatVector& v);

/// Some x with sum_j x_j columns[j] = target, if one exists.
std::optional<RatVector> solve_columns(const std::vector<RatVector>& columns, const RatVector& target);

/// Orthogonal projection of v onto the complement of span(basis) (standard inner product).
RatVector project_to_complement(const RatVector& v, const std::vector<IntVector>& basis);

/// Orthogonal projection of v onto span(basis).
RatVector project_to_span(const RatVector& v, const std::vector<IntVector>& basis);

}  // namespace tropical::linalg
