#include "tropical/polytope_algebra.hpp"

#include "tropical/error.hpp"
#include "tropical/linalg.hpp"
#include "tropical/lp.hpp"
#include "tropical/stable_intersection.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tropical {

namespace {

int codim_dim(std::size_t n, std::size_t k) { return static_cast<int>(n) - static_cast<int>(k); }

TropicalCycle normalize_grade(const TropicalCycle& c, std::size_t n, std::size_t k) {
  return c.is_zero() ? TropicalCycle::zero(n, codim_dim(n, k)) : c;
}

void check_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("algebra elements live in different spaces");
}

}  // namespace

AlgebraElement::AlgebraElement(std::size_t n, std::vector<TropicalCycle> grades) : n_(n), grades_(std::move(grades)) {
  if (grades_.size() != n + 1) throw DimensionMismatch("an algebra element needs n + 1 grades");
  for (std::size_t k = 0; k <= n; ++k) {
    if (grades_[k].ambient_dim() != n) throw DimensionMismatch("grade lives in the wrong ambient space");
    if (!grades_[k].is_zero() && grades_[k].codim() != static_cast<int>(k))
      throw DimensionMismatch("grade has the wrong codimension");
    grades_[k] = normalize_grade(grades_[k], n, k);
  }
}

AlgebraElement AlgebraElement::zero(std::size_t n) {
  std::vector<TropicalCycle> g;
  for (std::size_t k = 0; k <= n; ++k) g.push_back(TropicalCycle::zero(n, codim_dim(n, k)));
  return AlgebraElement(n, std::move(g));
}

AlgebraElement AlgebraElement::identity(std::size_t n) {
  auto e = zero(n);
  e.grades_[0] = TropicalCycle::ambient(n);
  return e;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(grades_.begin(), grades_.end(), [](const TropicalCycle& c) { return c.is_zero(); });
}

AlgebraElement phi(const RationalPolytope& p) {
  const std::size_t n = p.ambient_dim();
  const auto t = tropical_hypersurface(p);
  std::vector<TropicalCycle> g{TropicalCycle::ambient(n)};
  TropicalCycle acc = g[0];
  for (std::size_t k = 1; k <= n; ++k) {
    acc = k == 1 ? t : stable_intersection(acc, t);
    g.push_back(acc.scaled(Rational(1) / Rational(factorial(static_cast<unsigned>(k)))));
  }
  return AlgebraElement(n, std::move(g));
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  std::vector<TropicalCycle> g;
  for (std::size_t k = 0; k <= a.ambient_dim(); ++k) g.push_back(cycle_sum(a.grade(k), b.grade(k)));
  return AlgebraElement(a.ambient_dim(), std::move(g));
}

AlgebraElement scale(const AlgebraElement& a, const Rational& s) {
  std::vector<TropicalCycle> g;
  for (const auto& c : a.grades()) g.push_back(c.scaled(s));
  return AlgebraElement(a.ambient_dim(), std::move(g));
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) { return add(a, scale(b, -1)); }

AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  const std::size_t n = a.ambient_dim();
  auto out = AlgebraElement::zero(n);
  std::vector<TropicalCycle> g = out.grades();
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.grade(i).is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.grade(j).is_zero()) continue;
      g[i + j] = cycle_sum(g[i + j], stable_intersection(a.grade(i), b.grade(j)));
    }
  }
  return AlgebraElement(n, std::move(g));
}

AlgebraElement power(const AlgebraElement& a, unsigned k) {
  auto out = AlgebraElement::identity(a.ambient_dim());
  for (unsigned i = 0; i < k; ++i) out = product(out, a);
  return out;
}

bool elements_equal(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  for (std::size_t k = 0; k <= a.ambient_dim(); ++k)
    if (!cycles_equal(a.grade(k), b.grade(k))) return false;
  return true;
}

AlgebraElement log_element(const AlgebraElement& a) {
  const std::size_t n = a.ambient_dim();
  if (!cycles_equal(a.grade(0), TropicalCycle::ambient(n))) throw PreconditionError("log needs grade 0 equal to 1");
  const auto z = sub(a, AlgebraElement::identity(n));
  auto out = AlgebraElement::zero(n);
  auto zk = AlgebraElement::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    zk = product(zk, z);
    const Rational c = Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    out = add(out, scale(zk, c));
  }
  return out;
}

AlgebraElement exp_element(const AlgebraElement& z) {
  const std::size_t n = z.ambient_dim();
  if (!z.grade(0).is_zero()) throw PreconditionError("exp needs a vanishing grade 0");
  auto out = AlgebraElement::identity(n);
  auto zk = AlgebraElement::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    zk = product(zk, z);
    out = add(out, scale(zk, Rational(1) / Rational(factorial(static_cast<unsigned>(k)))));
  }
  return out;
}

ReferenceFan ReferenceFan::of_simple_polytope(const RationalPolytope& p) {
  const std::size_t n = p.ambient_dim();
  if (p.dim() != static_cast<int>(n)) throw ValidationError("reference polytope must be full-dimensional");
  ReferenceFan f;
  f.ambient_dim = n;
  const auto& ineqs = p.polyhedron().inequalities();
  for (const auto& h : ineqs) f.rays.push_back(h.normal);
  for (const auto& v : p.vertices()) {
    auto tight = p.polyhedron().tight_inequalities(v);
    if (tight.size() != n) throw ValidationError("reference polytope is not simple");
    f.cones.push_back(std::move(tight));
  }
  if (n == 0) f.cones = {{}};
  return f;
}

Polyhedron ReferenceFan::cone(const std::vector<std::size_t>& idx) const {
  std::vector<IntVector> r;
  for (auto i : idx) r.push_back(rays.at(i));
  return Polyhedron::cone(ambient_dim, r);
}

std::vector<std::vector<std::size_t>> ReferenceFan::cones_of_codim(std::size_t k) const {
  std::set<std::vector<std::size_t>> out;
  if (k > ambient_dim) return {};
  const std::size_t size = ambient_dim - k;
  for (const auto& c : cones) {
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    // All subsets of the given size, via a selection mask.
    std::vector<bool> mask(sorted.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(size), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (mask[i]) s.push_back(sorted[i]);
      out.insert(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return {out.begin(), out.end()};
}

void ReferenceFan::validate() const {
  const std::size_t n = ambient_dim;
  for (const auto& r : rays)
    if (r.size() != n || is_zero(r)) throw ValidationError("fan ray has the wrong dimension or is zero");
  if (cones.empty()) throw ValidationError("fan has no cones");
  for (const auto& c : cones) {
    if (c.size() != n) throw ValidationError("fan cone is not simplicial of full dimension");
    for (auto i : c)
      if (i >= rays.size()) throw ValidationError("fan cone refers to a missing ray");
    std::vector<IntVector> r;
    for (auto i : c) r.push_back(rays[i]);
    if (n > 0 && linalg::rank(r) != n) throw ValidationError("fan cone is not full-dimensional");
  }
  if (n == 0) return;
  // Each wall lies in exactly two cones, on opposite sides.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> walls;
  for (std::size_t ci = 0; ci < cones.size(); ++ci) {
    auto sorted = cones[ci];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t drop = 0; drop < n; ++drop) {
      auto w = sorted;
      w.erase(w.begin() + static_cast<long>(drop));
      walls[w].push_back(ci);
    }
  }
  for (const auto& [w, cs] : walls) {
    if (cs.size() != 2) throw ValidationError("fan is not complete: a wall borders " + std::to_string(cs.size()) + " cones");
    std::vector<IntVector> wr;
    for (auto i : w) wr.push_back(rays[i]);
    const auto normal = linalg::kernel(wr, n).front();
    Integer side[2];
    for (int s = 0; s < 2; ++s)
      for (auto i : cones[cs[s]])
        if (!std::binary_search(w.begin(), w.end(), i)) side[s] = dot(normal, rays[i]);
    if (sgn(side[0]) == sgn(side[1])) throw ValidationError("fan cones overlap across a wall");
  }
  // Covering degree one at a generic point.
  std::vector<AvoidedSubspace> avoid;
  for (const auto& [w, cs] : walls) {
    std::vector<IntVector> wr;
    for (auto i : w) wr.push_back(rays[i]);
    avoid.push_back(AvoidedSubspace::from_span(n, wr));
  }
  const auto v = pick_generic_vector(n, avoid).v;
  std::size_t hits = 0;
  for (const auto& c : cones) hits += cone(c).contains(v) ? 1 : 0;
  if (hits != 1) throw ValidationError("fan does not cover space exactly once");
}

namespace {

// Primitive normal of the wall, oriented towards the cone `into`.
IntVector wall_normal(const ReferenceFan& f, const std::vector<std::size_t>& wall, const std::vector<std::size_t>& into) {
  std::vector<IntVector> wr;
  for (auto i : wall) wr.push_back(f.rays[i]);
  auto u = primitive(linalg::kernel(wr, f.ambient_dim).front());
  for (auto i : into)
    if (!std::binary_search(wall.begin(), wall.end(), i)) {
      if (dot(u, f.rays[i]) < 0) u = negated(u);
      break;
    }
  return u;
}

std::vector<std::size_t> sorted_copy(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TropicalCycle wall_cycle(const ReferenceFan& f, const std::vector<std::vector<std::size_t>>& walls, const RatVector& w) {
  std::vector<Polyhedron> cells;
  std::vector<Rational> mults;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    cells.push_back(f.cone(walls[i]));
    mults.push_back(w[i]);
  }
  return TropicalCycle::from_proper_cells(f.ambient_dim, std::move(cells), std::move(mults),
                                          static_cast<int>(f.ambient_dim) - 1);
}

// Integrates nonnegative wall weights to a polytope by walking across walls.
RationalPolytope integrate(const ReferenceFan& f, const std::map<std::vector<std::size_t>, std::size_t>& wall_index,
                           const RatVector& w) {
  const std::size_t n = f.ambient_dim;
  std::vector<std::optional<RatVector>> vert(f.cones.size());
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_wall;
  for (std::size_t ci = 0; ci < f.cones.size(); ++ci) {
    const auto s = sorted_copy(f.cones[ci]);
    for (std::size_t drop = 0; drop < n; ++drop) {
      auto wl = s;
      wl.erase(wl.begin() + static_cast<long>(drop));
      by_wall[wl].push_back(ci);
    }
  }
  vert[0] = RatVector(n, Rational(0));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    const auto s = sorted_copy(f.cones[c]);
    for (std::size_t drop = 0; drop < n; ++drop) {
      auto wl = s;
      wl.erase(wl.begin() + static_cast<long>(drop));
      const auto& pair = by_wall.at(wl);
      const auto other = pair[0] == c ? pair[1] : pair[0];
      if (vert[other]) continue;
      const auto u = wall_normal(f, wl, f.cones[other]);
      vert[other] = add(*vert[c], scaled(to_rational(u), w[wall_index.at(wl)]));
      queue.push_back(other);
    }
  }
  std::vector<RatVector> pts;
  for (auto& v : vert) {
    if (!v) throw ValidationError("fan is not connected across walls");
    pts.push_back(*v);
  }
  return RationalPolytope(n, pts);
}

}  // namespace

HypersurfaceBasis build_hypersurface_basis(const ReferenceFan& fan) {
  fan.validate();
  const std::size_t n = fan.ambient_dim;
  HypersurfaceBasis b;
  b.fan = fan;
  if (n == 0) return b;
  b.walls = fan.cones_of_codim(1);
  const std::size_t m = b.walls.size();
  std::map<std::vector<std::size_t>, std::size_t> wall_index;
  for (std::size_t i = 0; i < m; ++i) wall_index[b.walls[i]] = i;

  // Balancing: for each codim-2 cone, weighted wall normals vanish modulo its span.
  std::vector<RatVector> eqs;
  for (const auto& tau : fan.cones_of_codim(2)) {
    const auto tcone = fan.cone(tau);
    std::vector<IntVector> tr;
    for (auto i : tau) tr.push_back(fan.rays[i]);
    const auto normals = linalg::kernel(tr, n);
    std::vector<RatVector> rows(normals.size(), RatVector(m, Rational(0)));
    for (std::size_t wi = 0; wi < m; ++wi) {
      if (!std::includes(b.walls[wi].begin(), b.walls[wi].end(), tau.begin(), tau.end())) continue;
      const auto v = lattice_normal(fan.cone(b.walls[wi]), tcone);
      for (std::size_t r = 0; r < normals.size(); ++r) rows[r][wi] = Rational(dot(normals[r], v));
    }
    eqs.insert(eqs.end(), rows.begin(), rows.end());
  }
  std::vector<RatVector> kernel;
  for (const auto& k : linalg::kernel(eqs, m)) kernel.push_back(to_rational(k));

  // Strictly positive representative: minimize the total weight subject to w >= 1.
  const std::size_t r = kernel.size();
  lp::LinearProgram prog(r);
  for (std::size_t wi = 0; wi < m; ++wi) {
    RatVector row(r);
    for (std::size_t j = 0; j < r; ++j) row[j] = kernel[j][wi];
    prog.add_ge(row, 1);
  }
  prog.objective.assign(r, Rational(0));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t wi = 0; wi < m; ++wi) prog.objective[j] -= kernel[j][wi];
  const auto sol = lp::solve(prog);
  if (sol.status != lp::Status::optimal) throw PreconditionError("fan is not polytopal");
  const auto& c = sol.x;
  RatVector f0(m, Rational(0));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t wi = 0; wi < m; ++wi) f0[wi] += c[j] * kernel[j][wi];

  // k_i + t_i f0 with t_i making the weights nonnegative; keep the family independent.
  std::vector<Rational> t(r, Rational(0));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t wi = 0; wi < m; ++wi) t[j] = std::max(t[j], Rational(-kernel[j][wi] / f0[wi]));
  // The new family is (I + c t^T)-related to the old one; its determinant is 1 + t . c.
  for (std::size_t j = 0;; ++j) {
    Rational det = 1;
    for (std::size_t i = 0; i < r; ++i) det += t[i] * c[i];
    if (det != 0) break;
    t[j % r] += 1;
  }
  for (std::size_t j = 0; j < r; ++j) {
    RatVector w(m);
    for (std::size_t wi = 0; wi < m; ++wi) w[wi] = kernel[j][wi] + t[j] * f0[wi];
    auto cyc = wall_cycle(fan, b.walls, w);
    auto poly = integrate(fan, wall_index, w);
    if (!cycles_equal(tropical_hypersurface(poly), cyc))
      throw InternalError("basis cycle is not the hypersurface of its integrated polytope");
    b.weights.push_back(std::move(w));
    b.cycles.push_back(std::move(cyc));
    b.polytopes.push_back(std::move(poly));
  }
  return b;
}

namespace {

void multisets(std::size_t m, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < m; ++i) {
    cur.push_back(i);
    multisets(m, k, i, cur, out);
    cur.pop_back();
  }
}

TropicalCycle term_product(const std::vector<std::size_t>& term, const HypersurfaceBasis& b) {
  TropicalCycle acc = TropicalCycle::ambient(b.fan.ambient_dim);
  for (std::size_t i = 0; i < term.size(); ++i) acc = i == 0 ? b.cycles[term[i]] : stable_intersection(acc, b.cycles[term[i]]);
  return acc;
}

}  // namespace

PowerDecomposition decompose_into_powers(const TropicalCycle& x, const HypersurfaceBasis& basis) {
  const std::size_t n = basis.fan.ambient_dim;
  if (x.ambient_dim() != n) throw DimensionMismatch("cycle and fan live in different spaces");
  PowerDecomposition d;
  if (x.is_zero()) return d;
  const auto k = static_cast<std::size_t>(x.codim());
  std::vector<std::size_t> cur;
  std::vector<std::vector<std::size_t>> terms;
  multisets(basis.cycles.size(), k, 0, cur, terms);
  std::vector<TropicalCycle> products;
  for (const auto& t : terms) products.push_back(term_product(t, basis));

  std::vector<RatVector> points;
  for (const auto& c : basis.fan.cones_of_codim(k)) {
    RatVector p(n, Rational(0));
    for (auto i : c) p = add(p, to_rational(basis.fan.rays[i]));
    points.push_back(std::move(p));
  }
  std::vector<RatVector> columns;
  for (const auto& p : products) {
    RatVector col;
    for (const auto& pt : points) col.push_back(p.multiplicity_at(pt));
    columns.push_back(std::move(col));
  }
  RatVector target;
  for (const auto& pt : points) target.push_back(x.multiplicity_at(pt));
  const auto sol = linalg::solve_columns(columns, target);
  if (!sol) throw ValidationError("cycle is not a combination of products of basis hypersurfaces");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if ((*sol)[i] == 0) continue;
    d.terms.push_back(terms[i]);
    d.coefficients.push_back((*sol)[i]);
  }
  if (!cycles_equal(recombine(d, basis), x))
    throw ValidationError("cycle is not supported on the reference fan or is not balanced");
  return d;
}

TropicalCycle recombine(const PowerDecomposition& d, const HypersurfaceBasis& basis) {
  const std::size_t n = basis.fan.ambient_dim;
  TropicalCycle acc = TropicalCycle::zero(n);
  for (std::size_t i = 0; i < d.terms.size(); ++i)
    acc = cycle_sum(acc, term_product(d.terms[i], basis).scaled(d.coefficients[i]));
  return acc;
}

}  // namespace tropical
