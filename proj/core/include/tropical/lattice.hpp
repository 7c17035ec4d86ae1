#pragma once

#include "tropical/numeric.hpp"

#include <optional>
#include <vector>

namespace tropical {

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> row_vectors() const;
  std::vector<IntVector> column_vectors() const;

  IntMatrix transposed() const;
  IntVector apply(const IntVector& x) const;
  RatVector apply(const RatVector& x) const;
  IntMatrix operator*(const IntMatrix& other) const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct RowHnf {
  IntMatrix form;       ///< U * M, upper echelon, positive pivots, reduced above pivots
  IntMatrix transform;  ///< unimodular U
  std::size_t rank = 0;
};

/// Row Hermite normal form with its unimodular transform.
RowHnf row_hnf(const IntMatrix& m);

/// Column Hermite normal form: same Z-column-span, canonical, zero columns dropped.
IntMatrix hnf(const IntMatrix& m);

/// Invariant factors d1 | d2 | ... (length min(rows, cols)); zeros mark rank deficiency.
std::vector<Integer> snf_diagonal(const IntMatrix& m);

/// Z-basis of {x in Z^cols : m x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Subgroup of Z^n given by generators; stored in canonical column-HNF form so that
/// equality of subgroups is equality of representations.
class LatticeSubgroup {
 public:
  LatticeSubgroup() = default;
  LatticeSubgroup(std::size_t ambient_rank, const std::vector<IntVector>& generators);

  static LatticeSubgroup full(std::size_t n);
  static LatticeSubgroup zero(std::size_t n);
  /// Z^n intersected with the Q-span of the generators.
  static LatticeSubgroup saturated_span(std::size_t n, const std::vector<IntVector>& generators);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  /// Canonical basis (columns of the HNF).
  const std::vector<IntVector>& basis() const { return basis_; }
  IntMatrix generator_matrix() const { return IntMatrix::from_columns(basis_, ambient_rank_); }

  bool contains(const IntVector& v) const;
  /// Integer coordinates of v in basis(), if v belongs to the subgroup.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const LatticeSubgroup& other) const;
  LatticeSubgroup saturation() const;
  bool is_saturated() const { return saturation() == *this; }

  bool operator==(const LatticeSubgroup& other) const = default;

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivot_rows_;
};

/// Group index, or "infinite" when the ranks differ.
class LatticeIndex {
 public:
  static LatticeIndex infinite() { return LatticeIndex(); }
  static LatticeIndex finite(Integer v) {
    LatticeIndex i;
    i.value_ = std::move(v);
    return i;
  }
  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Throws PreconditionError when infinite.
  const Integer& value() const;
  bool operator==(const LatticeIndex& other) const = default;

 private:
  std::optional<Integer> value_;
};

/// [ambient : sub]. Throws ValidationError if sub is not contained in ambient.
LatticeIndex lattice_index(const LatticeSubgroup& ambient, const LatticeSubgroup& sub);

LatticeSubgroup sum_lattices(const LatticeSubgroup& a, const LatticeSubgroup& b);
LatticeSubgroup intersect_lattices(const LatticeSubgroup& a, const LatticeSubgroup& b);
/// Image of a subgroup under an integer matrix.
LatticeSubgroup image_lattice(const IntMatrix& map, const LatticeSubgroup& a);

}  // namespace tropical
