#include "tropical/lattice.hpp"

#include "tropical/error.hpp"
#include "tropical/linalg.hpp"

#include <algorithm>
#include <utility>

namespace tropical {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch("IntMatrix::from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<long>(i * cols_),
                   data_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<IntVector> IntMatrix::column_vectors() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("IntMatrix::apply: vector length");
  IntVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

RatVector IntMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("IntMatrix::apply: vector length");
  RatVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += Rational((*this)(i, j)) * x[j];
    y[i] = s;
  }
  return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("IntMatrix product");
  IntMatrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += (*this)(i, k) * other(k, j);
    }
  return p;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row[target] -= q * row[source]
void sub_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(source, j) != 0) m(target, j) -= q * m(source, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

RowHnf row_hnf(const IntMatrix& m) {
  RowHnf out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.form;
  IntMatrix& u = out.transform;
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 && (best == rows || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == rows) break;
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        sub_row(h, i, r, q);
        sub_row(u, i, r, q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        sub_row(h, i, r, q);
        sub_row(u, i, r, q);
      }
    }
    ++r;
  }
  out.rank = r;
  return out;
}

IntMatrix hnf(const IntMatrix& m) {
  RowHnf rh = row_hnf(m.transposed());
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < rh.rank; ++i) cols.push_back(rh.form.row(i));
  return IntMatrix::from_columns(cols, m.rows());
}

std::vector<Integer> snf_diagonal(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t k = std::min(rows, cols);
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, x), a(i, y));
  };
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      swap_rows(a, t, pi);
      swap_cols(t, pj);
      bool done = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = floor_div(a(i, t), a(t, t));
        sub_row(a, i, t, q);
        if (a(i, t) != 0) done = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = floor_div(a(t, j), a(t, t));
        for (std::size_t i = 0; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) done = false;
      }
      if (!done) continue;
      // Divisibility of the remaining block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = 0; j < cols; ++j) a(t, j) += a(bad, j);
    }
  }
  std::vector<Integer> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = abs(a(i, i));
  // Nonzero factors first, divisibility already holds among them.
  std::stable_partition(d.begin(), d.end(), [](const Integer& x) { return x != 0; });
  return d;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  // U M^T = H; rows of U whose H-row vanishes span the kernel of M.
  RowHnf rh = row_hnf(m.transposed());
  std::vector<IntVector> basis;
  for (std::size_t i = rh.rank; i < rh.transform.rows(); ++i) basis.push_back(rh.transform.row(i));
  return basis;
}

LatticeSubgroup::LatticeSubgroup(std::size_t ambient_rank, const std::vector<IntVector>& generators)
    : ambient_rank_(ambient_rank) {
  for (const auto& g : generators)
    if (g.size() != ambient_rank) throw DimensionMismatch("LatticeSubgroup: generator length");
  if (generators.empty()) return;
  IntMatrix h = hnf(IntMatrix::from_columns(generators, ambient_rank));
  basis_ = h.column_vectors();
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    pivot_rows_.push_back(p);
  }
}

LatticeSubgroup LatticeSubgroup::full(std::size_t n) {
  return LatticeSubgroup(n, IntMatrix::identity(n).column_vectors());
}

LatticeSubgroup LatticeSubgroup::zero(std::size_t n) { return LatticeSubgroup(n, {}); }

LatticeSubgroup LatticeSubgroup::saturated_span(std::size_t n, const std::vector<IntVector>& generators) {
  std::vector<IntVector> nonzero;
  for (const auto& g : generators)
    if (!is_zero(g)) nonzero.push_back(g);
  if (nonzero.empty()) return zero(n);
  // Z^n intersected with the span = integer kernel of the orthogonal complement.
  auto perp = linalg::kernel(nonzero, n);
  if (perp.empty()) return full(n);
  return LatticeSubgroup(n, integer_kernel(IntMatrix::from_rows(perp, n)));
}

std::optional<IntVector> LatticeSubgroup::coordinates(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw DimensionMismatch("LatticeSubgroup::coordinates");
  IntVector rest = v;
  IntVector c(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const std::size_t p = pivot_rows_[j];
    for (std::size_t i = 0; i < p; ++i)
      if (rest[i] != 0) return std::nullopt;
    if (rest[p] % basis_[j][p] != 0) return std::nullopt;
    c[j] = rest[p] / basis_[j][p];
    for (std::size_t i = p; i < ambient_rank_; ++i) rest[i] -= c[j] * basis_[j][i];
  }
  if (!is_zero(rest)) return std::nullopt;
  return c;
}

bool LatticeSubgroup::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool LatticeSubgroup::contains(const LatticeSubgroup& other) const {
  if (other.ambient_rank_ != ambient_rank_) throw DimensionMismatch("LatticeSubgroup::contains");
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

LatticeSubgroup LatticeSubgroup::saturation() const { return saturated_span(ambient_rank_, basis_); }

const Integer& LatticeIndex::value() const {
  if (!value_) throw PreconditionError("lattice index is infinite");
  return *value_;
}

LatticeIndex lattice_index(const LatticeSubgroup& ambient, const LatticeSubgroup& sub) {
  if (ambient.ambient_rank() != sub.ambient_rank()) throw DimensionMismatch("lattice_index: ambient ranks differ");
  std::vector<IntVector> coords;
  for (const auto& g : sub.basis()) {
    auto c = ambient.coordinates(g);
    if (!c) throw ValidationError("lattice_index: subgroup is not contained in the ambient group");
    coords.push_back(*c);
  }
  if (sub.rank() < ambient.rank()) return LatticeIndex::infinite();
  if (ambient.rank() == 0) return LatticeIndex::finite(1);
  auto d = snf_diagonal(IntMatrix::from_columns(coords, ambient.rank()));
  Integer prod = 1;
  for (const auto& x : d) prod *= x;
  return LatticeIndex::finite(prod);
}

LatticeSubgroup sum_lattices(const LatticeSubgroup& a, const LatticeSubgroup& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionMismatch("sum_lattices");
  std::vector<IntVector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return LatticeSubgroup(a.ambient_rank(), gens);
}

LatticeSubgroup intersect_lattices(const LatticeSubgroup& a, const LatticeSubgroup& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionMismatch("intersect_lattices");
  const std::size_t n = a.ambient_rank();
  if (a.rank() == 0 || b.rank() == 0) return LatticeSubgroup::zero(n);
  // Solutions of A x = B y, i.e. kernel of [A | -B]; the intersection is A x.
  std::vector<IntVector> cols = a.basis();
  for (const auto& g : b.basis()) cols.push_back(negated(g));
  auto ker = integer_kernel(IntMatrix::from_columns(cols, n));
  std::vector<IntVector> gens;
  for (const auto& k : ker) {
    IntVector v(n, Integer(0));
    for (std::size_t j = 0; j < a.rank(); ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] += k[j] * a.basis()[j][i];
    gens.push_back(v);
  }
  return LatticeSubgroup(n, gens);
}

LatticeSubgroup image_lattice(const IntMatrix& map, const LatticeSubgroup& a) {
  if (map.cols() != a.ambient_rank()) throw DimensionMismatch("image_lattice");
  std::vector<IntVector> gens;
  for (const auto& g : a.basis()) gens.push_back(map.apply(g));
  return LatticeSubgroup(map.rows(), gens);
}

}  // namespace tropical
