#include "tropical/polytope.hpp"

#include "tropical/error.hpp"
#include "tropical/linalg.hpp"
#include "tropical/stable_intersection.hpp"

#include <numeric>

namespace tropical {

RationalPolytope::RationalPolytope(std::size_t n, const std::vector<RatVector>& points) {
  if (points.empty()) throw ValidationError("a polytope needs at least one point");
  for (const auto& x : points)
    if (x.size() != n) throw ValidationError("polytope point has the wrong dimension");
  p_ = Polyhedron::from_v(n, points);
}

RationalPolytope::RationalPolytope(const Polyhedron& p) : p_(p) {
  if (p.is_empty()) throw ValidationError("a polytope must be nonempty");
  if (!p.is_bounded()) throw ValidationError("a polytope must be bounded");
}

RationalPolytope RationalPolytope::simplex(std::size_t n, const Rational& scale) {
  std::vector<RatVector> pts{RatVector(n, Rational(0))};
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n, Rational(0));
    e[i] = scale;
    pts.push_back(std::move(e));
  }
  return RationalPolytope(n, pts);
}

RationalPolytope RationalPolytope::segment(const RatVector& a, const RatVector& b) {
  return RationalPolytope(a.size(), {a, b});
}

RationalPolytope RationalPolytope::cube(std::size_t n) {
  std::vector<RatVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
    pts.push_back(std::move(x));
  }
  return RationalPolytope(n, pts);
}

std::vector<std::pair<RatVector, RatVector>> RationalPolytope::edges() const {
  std::vector<std::pair<RatVector, RatVector>> out;
  if (dim() < 1) return out;
  const auto faces = p_.face_lattice();
  for (const auto& e : faces[1]) out.emplace_back(e.vertices()[0], e.vertices()[1]);
  return out;
}

RationalPolytope RationalPolytope::dilated(const Rational& s) const {
  std::vector<RatVector> pts;
  for (const auto& v : vertices()) pts.push_back(scaled(v, s));
  return RationalPolytope(ambient_dim(), pts);
}

RationalPolytope RationalPolytope::translated(const RatVector& shift) const {
  return RationalPolytope(p_.translated(shift));
}

RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q) {
  return RationalPolytope(minkowski_sum(p.polyhedron(), q.polyhedron()));
}

RationalPolytope convex_union(const RationalPolytope& p, const RationalPolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionMismatch("polytopes live in different spaces");
  auto pts = p.vertices();
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  return RationalPolytope(p.ambient_dim(), pts);
}

RationalPolytope intersect(const RationalPolytope& p, const RationalPolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionMismatch("polytopes live in different spaces");
  const auto r = intersect(p.polyhedron(), q.polyhedron());
  if (r.is_empty()) throw ValidationError("polytopes are disjoint");
  return RationalPolytope(r);
}

RationalPolytope support_face(const RationalPolytope& p, const RatVector& omega) {
  if (omega.size() != p.ambient_dim()) throw DimensionMismatch("direction has the wrong dimension");
  std::vector<RatVector> best;
  Rational top;
  for (const auto& v : p.vertices()) {
    const Rational val = dot(omega, v);
    if (best.empty() || val > top) {
      best = {v};
      top = val;
    } else if (val == top) {
      best.push_back(v);
    }
  }
  return RationalPolytope(p.ambient_dim(), best);
}

Polyhedron normal_cone(const RationalPolytope& p, const RatVector& x) {
  const auto& poly = p.polyhedron();
  if (!poly.contains(x)) throw PreconditionError("normal_cone: point is not in the polytope");
  std::vector<IntVector> rays;
  for (auto i : poly.tight_inequalities(x)) rays.push_back(poly.inequalities()[i].normal);
  std::vector<IntVector> lin;
  for (const auto& e : poly.equations()) lin.push_back(e.normal);
  return Polyhedron::cone(p.ambient_dim(), rays, lin);
}

Rational lattice_length(const RatVector& a, const RatVector& b) {
  const auto u = sub(b, a);
  const auto dir = integer_direction(u);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (dir[i] != 0) return u[i] / Rational(dir[i]);
  return 0;
}

TropicalCycle tropical_hypersurface(const RationalPolytope& p) {
  const std::size_t n = p.ambient_dim();
  std::vector<Polyhedron> cells;
  std::vector<Rational> mults;
  for (const auto& [a, b] : p.edges()) {
    cells.push_back(normal_cone(p, scaled(add(a, b), Rational(1, 2))));
    mults.push_back(lattice_length(a, b));
  }
  return TropicalCycle::from_proper_cells(n, std::move(cells), std::move(mults), n == 0 ? -1 : static_cast<int>(n) - 1);
}

Rational normalized_volume(const RationalPolytope& p) {
  const auto t = tropical_hypersurface(p);
  return origin_multiplicity(stable_power(t, static_cast<unsigned>(p.dim())));
}

Rational mixed_volume(const std::vector<RationalPolytope>& polytopes) {
  if (polytopes.empty()) throw ValidationError("mixed_volume needs at least one polytope");
  const std::size_t n = polytopes.front().ambient_dim();
  if (polytopes.size() != n) throw DimensionMismatch("mixed_volume needs exactly ambient_dim polytopes");
  std::vector<unsigned> ones(n, 1);
  return volume_polynomial_coefficient(polytopes, ones) / Rational(factorial(static_cast<unsigned>(n)));
}

Rational volume_polynomial_coefficient(const std::vector<RationalPolytope>& polytopes,
                                       const std::vector<unsigned>& exponents) {
  if (polytopes.size() != exponents.size()) throw ValidationError("one exponent per polytope is required");
  if (polytopes.empty()) throw ValidationError("at least one polytope is required");
  const std::size_t n = polytopes.front().ambient_dim();
  for (const auto& p : polytopes)
    if (p.ambient_dim() != n) throw DimensionMismatch("polytopes live in different spaces");
  const unsigned total = std::accumulate(exponents.begin(), exponents.end(), 0u);
  if (total != n) throw DimensionMismatch("exponents must sum to the ambient dimension");
  TropicalCycle acc = TropicalCycle::ambient(n);
  Rational coeff(factorial(static_cast<unsigned>(n)));
  for (std::size_t i = 0; i < polytopes.size(); ++i) {
    if (exponents[i] == 0) continue;
    coeff /= Rational(factorial(exponents[i]));
    acc = stable_intersection(acc, stable_power(tropical_hypersurface(polytopes[i]), exponents[i]));
    if (acc.is_zero()) return 0;
  }
  return coeff * origin_multiplicity(acc);
}

RationalPolytope projected_polytope(const RationalPolytope& p, const LatticeSubgroup& l) {
  if (l.ambient_rank() != p.ambient_dim()) throw DimensionMismatch("subspace has the wrong ambient rank");
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices())
    pts.push_back(l.rank() == 0 ? RatVector(v.size(), Rational(0)) : linalg::project_to_span(v, l.basis()));
  return RationalPolytope(p.ambient_dim(), pts);
}

TropicalCycle project_hypersurface(const RationalPolytope& p, const LatticeSubgroup& l) {
  if (l.ambient_rank() != p.ambient_dim()) throw DimensionMismatch("subspace has the wrong ambient rank");
  const std::size_t n = p.ambient_dim();
  const auto lcycle = TropicalCycle::linear_space(n, l.basis());
  const auto cut = stable_intersection(tropical_hypersurface(p), lcycle);
  const auto perp = linalg::kernel(l.basis(), n);
  return plus_span(cut, perp);
}

bool union_is_convex(const RationalPolytope& p, const RationalPolytope& q) {
  const auto c = convex_union(p, q);
  const std::size_t n = p.ambient_dim();
  std::vector<Halfspace> cuts;
  for (const auto& h : p.polyhedron().inequalities()) cuts.push_back(h);
  for (const auto& e : p.polyhedron().equations()) {
    cuts.push_back(e);
    cuts.push_back({negated(e.normal), -e.rhs});
  }
  for (const auto& h : cuts) {
    bool violated = false;
    for (const auto& v : c.vertices())
      if (dot(h.normal, v) > Rational(h.rhs)) violated = true;
    if (!violated) continue;
    // The part of conv(P ∪ Q) outside this facet must lie in Q.
    const auto outside = intersect(c.polyhedron(), Polyhedron::from_h(n, {{negated(h.normal), -h.rhs}}));
    for (const auto& v : outside.vertices())
      if (!q.polyhedron().contains(v)) return false;
  }
  return true;
}

ValuationReport valuation_check(const RationalPolytope& p, const RationalPolytope& q, unsigned k) {
  if (!union_is_convex(p, q)) throw PreconditionError("P ∪ Q is not convex");
  const auto u = convex_union(p, q);
  const auto m = intersect(p, q);
  const auto tp = tropical_hypersurface(p), tq = tropical_hypersurface(q);
  const auto tu = tropical_hypersurface(u), tm = tropical_hypersurface(m);
  ValuationReport r;
  r.power_identity = cycles_equal(cycle_sum(stable_power(tu, k), stable_power(tm, k)),
                                  cycle_sum(stable_power(tp, k), stable_power(tq, k)));
  r.product_identity = cycles_equal(stable_intersection(tu, tm), stable_intersection(tp, tq));
  return r;
}

}  // namespace tropical
