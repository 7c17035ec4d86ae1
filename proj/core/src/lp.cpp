#include "tropical/lp.hpp"

#include "tropical/error.hpp"

#include <optional>

namespace tropical::lp {

void LinearProgram::add_le(RatVector row, Rational rhs) {
  le_rows.push_back(std::move(row));
  le_rhs.push_back(std::move(rhs));
}

void LinearProgram::add_ge(RatVector row, const Rational& rhs) {
  for (auto& x : row) x = -x;
  add_le(std::move(row), -rhs);
}

void LinearProgram::add_eq(RatVector row, Rational rhs) {
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

namespace {

// Tableau for: maximize c.x s.t. A x = b, x >= 0, b >= 0.
class Tableau {
 public:
  Tableau(std::vector<RatVector> rows, std::vector<std::size_t> basis)
      : t_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return t_.empty() ? 0 : t_[0].size() - 1; }
  const Rational& rhs(std::size_t i) const { return t_[i].back(); }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i][j]; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t_[r][c];
    for (auto& x : t_[r]) x /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j < t_[i].size(); ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<long>(r));
    basis_.erase(basis_.begin() + static_cast<long>(r));
  }

  void truncate_columns(std::size_t keep) {
    for (auto& row : t_) {
      Rational b = row.back();
      row.resize(keep + 1);
      row[keep] = b;
    }
  }

  // Returns false when unbounded.
  bool optimize(const RatVector& c) {
    const std::size_t n = cols();
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < n && !enter; ++j) {
        Rational d = c[j];
        for (std::size_t i = 0; i < rows(); ++i)
          if (t_[i][j] != 0) d -= c[basis_[i]] * t_[i][j];
        if (d > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_[i][*enter] <= 0) continue;
        Rational ratio = t_[i].back() / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  Rational value(const RatVector& c) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows(); ++i) v += c[basis_[i]] * t_[i].back();
    return v;
  }

 private:
  std::vector<RatVector> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const LinearProgram& problem) {
  const std::size_t n = problem.num_vars;
  if (problem.le_rows.size() != problem.le_rhs.size() || problem.eq_rows.size() != problem.eq_rhs.size())
    throw DimensionMismatch("lp: row/rhs count mismatch");
  for (const auto& r : problem.le_rows)
    if (r.size() != n) throw DimensionMismatch("lp: row length");
  for (const auto& r : problem.eq_rows)
    if (r.size() != n) throw DimensionMismatch("lp: row length");
  if (!problem.objective.empty() && problem.objective.size() != n) throw DimensionMismatch("lp: objective length");

  // Column layout: for each variable a positive part, and a negative part if free;
  // then one slack per <= row, then one artificial per row.
  std::vector<std::size_t> pos(n), neg(n, SIZE_MAX);
  std::size_t ncol = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos[j] = ncol++;
    bool nn = !problem.nonnegative.empty() && problem.nonnegative[j];
    if (!nn) neg[j] = ncol++;
  }
  const std::size_t nle = problem.le_rows.size(), neq = problem.eq_rows.size();
  const std::size_t slack0 = ncol;
  ncol += nle;
  const std::size_t real_cols = ncol;
  const std::size_t m = nle + neq;
  const std::size_t art0 = ncol;
  ncol += m;

  std::vector<RatVector> rows(m, RatVector(ncol + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool le = i < nle;
    const RatVector& a = le ? problem.le_rows[i] : problem.eq_rows[i - nle];
    Rational b = le ? problem.le_rhs[i] : problem.eq_rhs[i - nle];
    RatVector& row = rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[pos[j]] = a[j];
      if (neg[j] != SIZE_MAX) row[neg[j]] = -a[j];
    }
    if (le) row[slack0 + i] = 1;
    row[ncol] = b;
    if (b < 0)
      for (auto& x : row) x = -x;
    row[art0 + i] = 1;
    basis[i] = art0 + i;
  }

  Tableau tab(std::move(rows), std::move(basis));
  RatVector phase1(ncol);
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
  tab.optimize(phase1);
  Solution out;
  if (tab.value(phase1) < 0) {
    out.status = Status::infeasible;
    return out;
  }
  // Drive artificials out of the basis; rows where that fails are redundant.
  for (std::size_t i = tab.rows(); i-- > 0;) {
    if (tab.basis()[i] < art0) continue;
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < real_cols && !col; ++j)
      if (tab.at(i, j) != 0) col = j;
    if (col)
      tab.pivot(i, *col);
    else
      tab.erase_row(i);
  }
  tab.truncate_columns(real_cols);

  RatVector c(real_cols);
  if (!problem.objective.empty())
    for (std::size_t j = 0; j < n; ++j) {
      c[pos[j]] = problem.objective[j];
      if (neg[j] != SIZE_MAX) c[neg[j]] = -problem.objective[j];
    }
  if (!tab.optimize(c)) {
    out.status = Status::unbounded;
    return out;
  }
  RatVector y(real_cols);
  for (std::size_t i = 0; i < tab.rows(); ++i) y[tab.basis()[i]] = tab.rhs(i);
  out.x.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    out.x[j] = y[pos[j]];
    if (neg[j] != SIZE_MAX) out.x[j] -= y[neg[j]];
  }
  out.status = Status::optimal;
  out.value = problem.objective.empty() ? Rational(0) : dot(problem.objective, out.x);
  return out;
}

bool feasible(const LinearProgram& problem) {
  LinearProgram p = problem;
  p.objective.clear();
  return solve(p).status != Status::infeasible;
}

}  // namespace tropical::lp
