#include "tropical/stable_intersection.hpp"

#include "tropical/error.hpp"
#include "tropical/linalg.hpp"

#include <map>
#include <set>

namespace tropical {

namespace {

struct CellData {
  std::vector<IntVector> dirs;
  LatticeSubgroup lattice;
};

std::vector<CellData> cell_data(const TropicalCycle& x) {
  std::vector<CellData> out;
  for (const auto& c : x.cells()) out.push_back({c.direction_basis(), c.direction_lattice()});
  return out;
}

std::size_t joint_rank(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  std::vector<IntVector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return all.empty() ? 0 : linalg::rank(all);
}

Integer sum_index(std::size_t n, const LatticeSubgroup& a, const LatticeSubgroup& b) {
  return lattice_index(LatticeSubgroup::full(n), sum_lattices(a, b)).value();
}

int expected_dim(const TropicalCycle& x, const TropicalCycle& y) {
  if (x.dim() < 0 || y.dim() < 0) return -1;
  const int d = x.dim() + y.dim() - static_cast<int>(x.ambient_dim());
  return d < 0 ? -1 : d;
}

void check_ambient(const TropicalCycle& x, const TropicalCycle& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionMismatch("cycles live in different ambient spaces");
}

// Collects avoided subspaces without repeating the same subspace twice.
class AvoidSet {
 public:
  explicit AvoidSet(std::size_t n) : n_(n) {}
  void add_normals(std::vector<IntVector> normals) {
    auto key = linalg::canonical_span_basis(normals, n_);
    if (seen_.insert(key).second) list_.push_back({std::move(key)});
  }
  void add_span(const std::vector<IntVector>& spanning) { add_normals(linalg::kernel(spanning, n_)); }
  std::vector<AvoidedSubspace> take() { return std::move(list_); }

 private:
  std::size_t n_;
  std::set<std::vector<IntVector>> seen_;
  std::vector<AvoidedSubspace> list_;
};

}  // namespace

PolyhedralComplex stable_support(const TropicalCycle& x, const TropicalCycle& y) {
  check_ambient(x, y);
  const std::size_t n = x.ambient_dim();
  const int d = expected_dim(x, y);
  std::vector<Polyhedron> cells;
  if (d < 0) return PolyhedralComplex(n, cells);
  const auto dx = cell_data(x);
  const auto dy = cell_data(y);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (joint_rank(dx[i].dirs, dy[j].dirs) != n) continue;
      auto g = intersect(x.cells()[i], y.cells()[j]);
      if (g.dim() == d) cells.push_back(std::move(g));
    }
  return PolyhedralComplex(n, std::move(cells));
}

IntersectionReport stable_intersection_report(const TropicalCycle& x, const TropicalCycle& y) {
  check_ambient(x, y);
  const std::size_t n = x.ambient_dim();
  const int d = expected_dim(x, y);
  IntersectionReport report;
  report.result = TropicalCycle::zero(n, d);
  if (x.is_zero() || y.is_zero() || d < 0) {
    report.generic_vector = pick_generic_vector(n, {});
    return report;
  }
  const auto dx = cell_data(x);
  const auto dy = cell_data(y);

  std::set<Polyhedron, PolyhedronLess> candidates;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (joint_rank(dx[i].dirs, dy[j].dirs) != n) continue;
      auto g = intersect(x.cells()[i], y.cells()[j]);
      if (g.dim() == d) candidates.insert(std::move(g));
    }

  struct LocalPair {
    std::size_t i, j;
    Polyhedron cone;  // link_ω σ - link_ω τ
  };
  std::vector<std::pair<Polyhedron, std::vector<LocalPair>>> local;
  AvoidSet avoid(n);
  for (const auto& g : candidates) {
    const auto omega = g.relative_interior_point();
    std::vector<LocalPair> pairs;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x.cells()[i].contains(omega)) continue;
      const auto ls = x.cells()[i].link_at(omega);
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (!y.cells()[j].contains(omega)) continue;
        if (joint_rank(dx[i].dirs, dy[j].dirs) != n) {
          std::vector<IntVector> span = dx[i].dirs;
          span.insert(span.end(), dy[j].dirs.begin(), dy[j].dirs.end());
          avoid.add_span(span);
          continue;
        }
        auto c = minkowski_sum(ls, negated(y.cells()[j].link_at(omega)));
        for (const auto& h : c.inequalities()) avoid.add_normals({h.normal});
        pairs.push_back({i, j, std::move(c)});
      }
    }
    local.emplace_back(g, std::move(pairs));
  }

  report.generic_vector = pick_generic_vector(n, avoid.take());
  const auto& v = report.generic_vector.v;
  std::vector<Polyhedron> cells;
  std::vector<Rational> mults;
  for (auto& [g, pairs] : local) {
    IntersectionFace face{g, 0, {}};
    for (const auto& p : pairs) {
      if (!p.cone.contains(v)) continue;
      const Integer index = sum_index(n, dx[p.i].lattice, dy[p.j].lattice);
      const Rational term = x.mults()[p.i] * y.mults()[p.j] * Rational(index);
      face.multiplicity += term;
      face.pairs.push_back({p.i, p.j, index, term});
    }
    if (face.multiplicity != 0) {
      cells.push_back(g);
      mults.push_back(face.multiplicity);
    }
    report.faces.push_back(std::move(face));
  }
  report.result = TropicalCycle::from_proper_cells(n, std::move(cells), std::move(mults), d);
  return report;
}

TropicalCycle stable_intersection(const TropicalCycle& x, const TropicalCycle& y) {
  return stable_intersection_report(x, y).result;
}

TropicalCycle stable_power(const TropicalCycle& x, unsigned k) {
  TropicalCycle out = TropicalCycle::ambient(x.ambient_dim());
  for (unsigned i = 0; i < k; ++i) out = i == 0 ? x : stable_intersection(out, x);
  return out;
}

TropicalCycle diagonal_intersection(const TropicalCycle& x, const TropicalCycle& y) {
  check_ambient(x, y);
  const std::size_t n = x.ambient_dim();
  std::vector<IntVector> diag;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(2 * n, Integer(0));
    e[i] = 1;
    e[n + i] = 1;
    diag.push_back(std::move(e));
  }
  const auto product = cartesian_product(x, y);
  const auto delta = TropicalCycle::linear_space(2 * n, diag);
  const auto w = stable_intersection(product, delta);
  if (w.is_zero()) return TropicalCycle::zero(n, expected_dim(x, y));
  IntMatrix proj(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) proj(i, i) = 1;
  return pushforward(proj, w);
}

GenericVector oracle_generic_vector(const TropicalCycle& x, const TropicalCycle& y) {
  check_ambient(x, y);
  const std::size_t n = x.ambient_dim();
  auto spans = [n](const TropicalCycle& c) {
    std::set<std::vector<IntVector>> out;
    for (const auto& cell : c.cells())
      for (const auto& level : cell.face_lattice())
        for (const auto& f : level) out.insert(linalg::canonical_span_basis(f.direction_basis(), n));
    return out;
  };
  const auto sx = spans(x);
  const auto sy = spans(y);
  AvoidSet avoid(n);
  for (const auto& a : sx)
    for (const auto& b : sy)
      if (joint_rank(a, b) < n) {
        std::vector<IntVector> s = a;
        s.insert(s.end(), b.begin(), b.end());
        avoid.add_span(s);
      }
  return pick_generic_vector(n, avoid.take());
}

namespace {

PerturbationResult perturb_once(const TropicalCycle& x, const TropicalCycle& y, const RatVector& shift, int d) {
  const std::size_t n = x.ambient_dim();
  const auto dx = cell_data(x);
  const auto dy = cell_data(y);
  std::vector<Polyhedron> cells;
  std::vector<Rational> mults;
  std::vector<WeightedCell> limit;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const auto moved = y.cells()[j].translated(shift);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto s = intersect(x.cells()[i], moved);
      if (s.is_empty()) continue;
      const auto p = s.relative_interior_point();
      if (s.dim() != d || !x.cells()[i].in_relative_interior(p) || !moved.in_relative_interior(p))
        throw PreconditionError("perturbed intersection is not transverse");
      const Rational term = x.mults()[i] * y.mults()[j] * Rational(sum_index(n, dx[i].lattice, dy[j].lattice));
      const auto rec = s.recession_cone();
      if (rec.dim() == d) limit.push_back({rec, term});
      cells.push_back(s);
      mults.push_back(term);
    }
  }
  PerturbationResult r;
  r.perturbed = TropicalCycle::from_proper_cells(n, std::move(cells), std::move(mults), d);
  r.limit = TropicalCycle::from_weighted(n, limit, d);
  return r;
}

}  // namespace

PerturbationResult perturbation_oracle(const TropicalCycle& x, const TropicalCycle& y, const GenericVector& v,
                                       const Rational& epsilon, bool check_stability) {
  check_ambient(x, y);
  if (!x.is_fan() || !y.is_fan()) throw PreconditionError("perturbation oracle requires fans");
  if (epsilon <= 0) throw PreconditionError("perturbation size must be positive");
  if (v.v.size() != x.ambient_dim() || !v.verify()) throw PreconditionError("perturbation vector is not certified");
  const int d = expected_dim(x, y);
  if (x.is_zero() || y.is_zero() || d < 0) {
    PerturbationResult r;
    r.perturbed = r.limit = TropicalCycle::zero(x.ambient_dim(), d);
    return r;
  }
  auto r = perturb_once(x, y, scaled(v.v, epsilon), d);
  if (check_stability) {
    const auto half = perturb_once(x, y, scaled(v.v, epsilon / 2), d);
    if (half.perturbed.size() != r.perturbed.size() || !cycles_equal(half.limit, r.limit))
      throw PreconditionError("perturbation is not in its stable regime");
  }
  return r;
}

}  // namespace tropical
