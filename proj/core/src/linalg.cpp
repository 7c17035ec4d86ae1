#include "tropical/linalg.hpp"

#include "tropical/error.hpp"

namespace tropical::linalg {

std::size_t rank(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  // Fraction-free elimination; rows kept primitive to bound growth.
  std::vector<IntVector> rows = vectors;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Integer a = rows[r][c], b = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = a * rows[i][k] - b * rows[r][k];
      rows[i] = primitive_or_zero(rows[i]);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<RatVector>& vectors) {
  std::vector<IntVector> ints;
  ints.reserve(vectors.size());
  for (const auto& v : vectors) ints.push_back(integer_direction(v));
  return rank(ints);
}

std::vector<std::size_t> rref(std::vector<RatVector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<IntVector> kernel(const std::vector<RatVector>& rows_in, std::size_t dim) {
  std::vector<RatVector> rows = rows_in;
  auto pivots = rref(rows);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(dim, Rational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][f];
    basis.push_back(integer_direction(x));
  }
  return basis;
}

std::vector<IntVector> kernel(const std::vector<IntVector>& rows, std::size_t dim) {
  std::vector<RatVector> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_rational(v));
  return kernel(r, dim);
}

std::vector<IntVector> canonical_span_basis(const std::vector<IntVector>& vectors, std::size_t dim) {
  std::vector<RatVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionMismatch("canonical_span_basis: vector length");
    rows.push_back(to_rational(v));
  }
  rref(rows);
  std::vector<IntVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(integer_direction(r));
  return out;
}

bool in_span(const std::vector<IntVector>& vectors, const IntVector& v) {
  if (is_zero(v)) return true;
  if (vectors.empty()) return false;
  std::vector<IntVector> ext = vectors;
  const std::size_t r = rank(vectors);
  ext.push_back(v);
  return rank(ext) == r;
}

bool in_span(const std::vector<IntVector>& vectors, const RatVector& v) {
  return in_span(vectors, integer_direction(v));
}

std::optional<RatVector> solve_columns(const std::vector<RatVector>& columns, const RatVector& target) {
  const std::size_t m = target.size();
  const std::size_t k = columns.size();
  // Augmented [columns | target] as rows of length k+1.
  std::vector<RatVector> rows(m, RatVector(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = columns[j][i];
    rows[i][k] = target[i];
  }
  auto pivots = rref(rows);
  RatVector x(k, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == k) return std::nullopt;
    x[pivots[i]] = rows[i][k];
  }
  return x;
}

RatVector project_to_span(const RatVector& v, const std::vector<IntVector>& basis) {
  const std::size_t n = v.size();
  if (basis.empty()) return RatVector(n, Rational(0));
  // Solve (B^T B) c = B^T v.
  const std::size_t k = basis.size();
  std::vector<RatVector> gram_cols(k, RatVector(k));
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis[i], v);
    for (std::size_t j = 0; j < k; ++j) gram_cols[j][i] = Rational(dot(basis[i], basis[j]));
  }
  auto c = solve_columns(gram_cols, rhs);
  if (!c) throw InternalError("project_to_span: singular Gram matrix");
  RatVector out(n, Rational(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) out[i] += (*c)[j] * basis[j][i];
  return out;
}

RatVector project_to_complement(const RatVector& v, const std::vector<IntVector>& basis) {
  if (basis.empty()) return v;
  return sub(v, project_to_span(v, basis));
}

}  // namespace tropical::linalg
