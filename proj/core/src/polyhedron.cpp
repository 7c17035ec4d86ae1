#include "tropical/polyhedron.hpp"

#include "tropical/double_description.hpp"
#include "tropical/error.hpp"
#include "tropical/linalg.hpp"
#include "tropical/lp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tropical {

namespace {

int compare_int(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

int compare_rat(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

bool int_less(const IntVector& a, const IntVector& b) { return compare_int(a, b) < 0; }
bool rat_less(const RatVector& a, const RatVector& b) { return compare_rat(a, b) < 0; }

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
  int c = compare_int(a.normal, b.normal);
  if (c != 0) return c < 0;
  return a.rhs < b.rhs;
}

IntVector hom_point(const RatVector& v) {
  RatVector h = v;
  h.push_back(1);
  return integer_direction(h);
}

IntVector hom_direction(const IntVector& r) {
  IntVector h = r;
  h.push_back(0);
  return h;
}

IntVector hom_ineq(const Halfspace& h) {
  IntVector y = negated(h.normal);
  y.push_back(h.rhs);
  return y;
}

IntVector hom_eq(const Halfspace& h) { return hom_ineq(h); }

std::size_t first_nonzero(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

// Zeroes the pivot coordinates of v against RREF-shaped rows (integer, positive pivots).
IntVector reduce_int(IntVector v, const std::vector<IntVector>& rref_rows) {
  for (const auto& r : rref_rows) {
    std::size_t p = first_nonzero(r);
    if (v[p] == 0) continue;
    Integer a = r[p], b = v[p];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = a * v[j] - b * r[j];
  }
  return primitive_or_zero(v);
}

RatVector reduce_rat(RatVector v, const std::vector<IntVector>& rref_rows) {
  for (const auto& r : rref_rows) {
    std::size_t p = first_nonzero(r);
    if (v[p] == 0) continue;
    Rational f = v[p] / Rational(r[p]);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (r[j] != 0) v[j] -= f * r[j];
  }
  return v;
}

std::vector<IntVector> drop_last(const std::vector<IntVector>& vs) {
  std::vector<IntVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.emplace_back(v.begin(), v.end() - 1);
  return out;
}

void check_dim(std::size_t n, std::size_t got, const char* what) {
  if (n != got) throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(n) +
                                        ", got " + std::to_string(got));
}

}  // namespace

Halfspace make_halfspace(const RatVector& normal, const Rational& rhs) {
  RatVector all = normal;
  all.push_back(rhs);
  IntVector v = integer_direction(all);
  Halfspace h;
  h.rhs = v.back();
  v.pop_back();
  h.normal = std::move(v);
  return h;
}

Polyhedron Polyhedron::finalize(std::size_t n, Homog h, bool gens_extreme, bool ineqs_facets) {
  Polyhedron p;
  p.n_ = n;
  const std::size_t D = n + 1;
  bool any_point = false;
  for (const auto& g : h.gens)
    if (g[n] > 0) any_point = true;
  if (!any_point) {
    p.empty_ = true;
    return p;
  }
  p.empty_ = false;

  std::vector<IntVector> lin = linalg::canonical_span_basis(h.lin, D);
  std::vector<IntVector> span_rows = h.gens;
  span_rows.insert(span_rows.end(), lin.begin(), lin.end());
  const std::size_t cone_dim = linalg::rank(span_rows);
  std::vector<IntVector> eqs = linalg::canonical_span_basis(linalg::kernel(span_rows, D), D);

  // Facet rows in homogeneous form (still including t >= 0 if it is a facet).
  std::vector<IntVector> facet_rows;
  {
    std::set<IntVector, decltype(&int_less)> seen(&int_less);
    for (const auto& f : h.ineqs) {
      IntVector r = reduce_int(f, eqs);
      if (is_zero(r)) continue;
      if (!ineqs_facets) {
        std::vector<IntVector> tight = lin;
        for (const auto& g : h.gens)
          if (dot(r, g) == 0) tight.push_back(g);
        if (linalg::rank(tight) + 1 != cone_dim) continue;
      }
      if (seen.insert(r).second) facet_rows.push_back(r);
    }
  }

  // Generators, reduced modulo the lineality.
  std::vector<IntVector> lin_x = drop_last(lin);
  std::vector<IntVector> lin_x_rref = linalg::canonical_span_basis(lin_x, n);
  const std::size_t need = D - 1 - lin.size();
  std::set<RatVector, decltype(&rat_less)> verts(&rat_less);
  std::set<IntVector, decltype(&int_less)> rays(&int_less);
  for (const auto& g : h.gens) {
    if (!gens_extreme) {
      std::vector<IntVector> tight = eqs;
      for (const auto& f : facet_rows)
        if (dot(f, g) == 0) tight.push_back(f);
      if (linalg::rank(tight) != need) continue;
    }
    if (g[n] > 0) {
      RatVector v(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = Rational(g[i], g[n]);
        v[i].canonicalize();
      }
      verts.insert(reduce_rat(std::move(v), lin_x_rref));
    } else {
      IntVector r(g.begin(), g.end() - 1);
      r = reduce_int(std::move(r), lin_x_rref);
      if (!is_zero(r)) rays.insert(std::move(r));
    }
  }
  p.vertices_.assign(verts.begin(), verts.end());
  p.rays_.assign(rays.begin(), rays.end());
  p.lineality_ = std::move(lin_x_rref);

  for (const auto& f : facet_rows) {
    Halfspace hs;
    hs.normal.assign(f.begin(), f.end() - 1);
    if (is_zero(hs.normal)) continue;  // the face at infinity
    hs.normal = negated(hs.normal);
    hs.rhs = f[n];
    p.ineqs_.push_back(std::move(hs));
  }
  std::sort(p.ineqs_.begin(), p.ineqs_.end(), halfspace_less);
  for (const auto& e : eqs) {
    Halfspace hs;
    hs.normal.assign(e.begin(), e.end() - 1);
    hs.rhs = -e[n];
    p.eqs_.push_back(std::move(hs));
  }
  return p;
}

Polyhedron::Homog Polyhedron::homog() const {
  Homog h;
  for (const auto& f : ineqs_) h.ineqs.push_back(hom_ineq(f));
  for (const auto& e : eqs_) h.eqs.push_back(hom_eq(e));
  for (const auto& v : vertices_) h.gens.push_back(hom_point(v));
  for (const auto& r : rays_) h.gens.push_back(hom_direction(r));
  for (const auto& l : lineality_) h.lin.push_back(hom_direction(l));
  return h;
}

Polyhedron Polyhedron::from_h(std::size_t n, const std::vector<Halfspace>& inequalities,
                              const std::vector<Halfspace>& equations) {
  std::vector<IntVector> ineqs, eqs;
  for (const auto& f : inequalities) {
    check_dim(n, f.normal.size(), "Polyhedron::from_h");
    ineqs.push_back(hom_ineq(f));
  }
  IntVector t_row(n + 1, Integer(0));
  t_row[n] = 1;
  ineqs.push_back(t_row);
  for (const auto& e : equations) {
    check_dim(n, e.normal.size(), "Polyhedron::from_h");
    eqs.push_back(hom_eq(e));
  }
  ConeGenerators cg = cone_generators(n + 1, ineqs, eqs);
  Homog h;
  h.gens = std::move(cg.rays);
  h.lin = std::move(cg.lineality);
  h.ineqs = std::move(ineqs);
  return finalize(n, std::move(h), true, false);
}

Polyhedron Polyhedron::from_v(std::size_t n, const std::vector<RatVector>& vertices,
                              const std::vector<IntVector>& rays, const std::vector<IntVector>& lineality) {
  if (vertices.empty()) return empty(n);
  Homog h;
  for (const auto& v : vertices) {
    check_dim(n, v.size(), "Polyhedron::from_v");
    h.gens.push_back(hom_point(v));
  }
  for (const auto& r : rays) {
    check_dim(n, r.size(), "Polyhedron::from_v");
    if (!is_zero(r)) h.gens.push_back(hom_direction(primitive(r)));
  }
  std::vector<IntVector> lin;
  for (const auto& l : lineality) {
    check_dim(n, l.size(), "Polyhedron::from_v");
    if (!is_zero(l)) lin.push_back(hom_direction(l));
  }
  ConeGenerators dual = cone_generators(n + 1, h.gens, lin);
  h.ineqs = std::move(dual.rays);
  h.eqs = std::move(dual.lineality);
  std::vector<IntVector> rows = h.ineqs;
  rows.insert(rows.end(), h.eqs.begin(), h.eqs.end());
  h.lin = linalg::kernel(rows, n + 1);
  return finalize(n, std::move(h), false, true);
}

Polyhedron Polyhedron::cone(std::size_t n, const std::vector<IntVector>& rays, const std::vector<IntVector>& lineality) {
  return from_v(n, {RatVector(n, Rational(0))}, rays, lineality);
}

Polyhedron Polyhedron::empty(std::size_t n) {
  Polyhedron p;
  p.n_ = n;
  p.empty_ = true;
  return p;
}

Polyhedron Polyhedron::whole(std::size_t n) {
  Polyhedron p;
  p.n_ = n;
  p.empty_ = false;
  p.vertices_.push_back(RatVector(n, Rational(0)));
  p.lineality_ = IntMatrix::identity(n).row_vectors();
  return p;
}

Polyhedron Polyhedron::point(const RatVector& x) {
  const std::size_t n = x.size();
  Homog h;
  h.gens.push_back(hom_point(x));
  return finalize(n, std::move(h), true, true);
}

Polyhedron Polyhedron::linear_space(std::size_t n, const std::vector<IntVector>& basis) {
  Homog h;
  h.gens.push_back(hom_point(RatVector(n, Rational(0))));
  for (const auto& b : basis) {
    check_dim(n, b.size(), "Polyhedron::linear_space");
    if (!is_zero(b)) h.lin.push_back(hom_direction(b));
  }
  return finalize(n, std::move(h), true, true);
}

int Polyhedron::dim() const {
  if (empty_) return -1;
  return static_cast<int>(n_) - static_cast<int>(eqs_.size());
}

bool Polyhedron::is_cone() const {
  return !empty_ && vertices_.size() == 1 && is_zero(vertices_[0]);
}

bool Polyhedron::contains(const RatVector& x) const {
  check_dim(n_, x.size(), "Polyhedron::contains");
  if (empty_) return false;
  for (const auto& e : eqs_)
    if (dot(e.normal, x) != Rational(e.rhs)) return false;
  for (const auto& f : ineqs_)
    if (dot(f.normal, x) > Rational(f.rhs)) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
  check_dim(n_, other.n_, "Polyhedron::contains");
  if (other.empty_) return true;
  if (empty_) return false;
  for (const auto& v : other.vertices_)
    if (!contains(v)) return false;
  for (const auto& r : other.rays_) {
    for (const auto& e : eqs_)
      if (dot(e.normal, r) != 0) return false;
    for (const auto& f : ineqs_)
      if (dot(f.normal, r) > 0) return false;
  }
  for (const auto& l : other.lineality_) {
    for (const auto& e : eqs_)
      if (dot(e.normal, l) != 0) return false;
    for (const auto& f : ineqs_)
      if (dot(f.normal, l) != 0) return false;
  }
  return true;
}

bool Polyhedron::in_relative_interior(const RatVector& x) const {
  if (!contains(x)) return false;
  for (const auto& f : ineqs_)
    if (dot(f.normal, x) == Rational(f.rhs)) return false;
  return true;
}

RatVector Polyhedron::relative_interior_point() const {
  if (empty_) throw PreconditionError("relative interior of the empty polyhedron");
  RatVector c(n_, Rational(0));
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < n_; ++i) c[i] += v[i];
  const Rational k(static_cast<long>(vertices_.size()));
  for (auto& x : c) x /= k;
  for (const auto& r : rays_)
    for (std::size_t i = 0; i < n_; ++i) c[i] += r[i];
  return c;
}

std::vector<IntVector> Polyhedron::direction_basis() const {
  if (empty_) return {};
  std::vector<IntVector> normals;
  for (const auto& e : eqs_) normals.push_back(e.normal);
  return linalg::canonical_span_basis(linalg::kernel(normals, n_), n_);
}

LatticeSubgroup Polyhedron::direction_lattice() const {
  return LatticeSubgroup::saturated_span(n_, direction_basis());
}

std::vector<std::size_t> Polyhedron::tight_inequalities(const RatVector& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ineqs_.size(); ++i)
    if (dot(ineqs_[i].normal, x) == Rational(ineqs_[i].rhs)) out.push_back(i);
  return out;
}

Polyhedron Polyhedron::face(const std::vector<std::size_t>& tight) const {
  if (empty_) return *this;
  std::vector<bool> is_tight(ineqs_.size(), false);
  for (auto i : tight) {
    if (i >= ineqs_.size()) throw PreconditionError("Polyhedron::face: inequality index out of range");
    is_tight[i] = true;
  }
  Homog h;
  for (const auto& v : vertices_) {
    bool ok = true;
    for (auto i : tight)
      if (dot(ineqs_[i].normal, v) != Rational(ineqs_[i].rhs)) {
        ok = false;
        break;
      }
    if (ok) h.gens.push_back(hom_point(v));
  }
  for (const auto& r : rays_) {
    bool ok = true;
    for (auto i : tight)
      if (dot(ineqs_[i].normal, r) != 0) {
        ok = false;
        break;
      }
    if (ok) h.gens.push_back(hom_direction(r));
  }
  for (const auto& l : lineality_) h.lin.push_back(hom_direction(l));
  for (std::size_t i = 0; i < ineqs_.size(); ++i)
    if (!is_tight[i]) h.ineqs.push_back(hom_ineq(ineqs_[i]));
  return finalize(n_, std::move(h), true, false);
}

Polyhedron Polyhedron::minimal_face(const RatVector& x) const {
  if (!contains(x)) throw PreconditionError("Polyhedron::minimal_face: point not contained");
  return face(tight_inequalities(x));
}

std::vector<Polyhedron> Polyhedron::facets() const {
  std::vector<Polyhedron> out;
  for (std::size_t i = 0; i < ineqs_.size(); ++i) out.push_back(face({i}));
  return out;
}

std::vector<std::vector<Polyhedron>> Polyhedron::face_lattice() const {
  std::vector<std::vector<Polyhedron>> out;
  if (empty_) return out;
  const int top = dim();
  const int bottom = static_cast<int>(lineality_.size());
  out.resize(static_cast<std::size_t>(top - bottom + 1));

  // Generator-by-inequality incidence.
  std::vector<IntVector> gens;
  for (const auto& v : vertices_) gens.push_back(hom_point(v));
  for (const auto& r : rays_) gens.push_back(hom_direction(r));
  std::vector<IntVector> lin;
  for (const auto& l : lineality_) lin.push_back(hom_direction(l));
  const std::size_t m = ineqs_.size();
  std::vector<std::vector<bool>> inc(gens.size(), std::vector<bool>(m));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < m; ++i) inc[g][i] = dot(hom_ineq(ineqs_[i]), gens[g]) == 0;

  auto gens_of = [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> out_g;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      bool ok = true;
      for (auto i : s)
        if (!inc[g][i]) {
          ok = false;
          break;
        }
      if (ok) out_g.push_back(g);
    }
    return out_g;
  };
  auto closure = [&](const std::vector<std::size_t>& g_set) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i) {
      bool ok = true;
      for (auto g : g_set)
        if (!inc[g][i]) {
          ok = false;
          break;
        }
      if (ok) s.push_back(i);
    }
    return s;
  };
  auto face_dim = [&](const std::vector<std::size_t>& g_set) {
    std::vector<IntVector> rows = lin;
    for (auto g : g_set) rows.push_back(gens[g]);
    return static_cast<int>(linalg::rank(rows)) - 1;
  };

  std::set<std::vector<std::size_t>> level{std::vector<std::size_t>{}};
  for (int d = top; d >= bottom; --d) {
    std::set<std::vector<std::size_t>> next;
    for (const auto& s : level) {
      out[static_cast<std::size_t>(d - bottom)].push_back(face(s));
      if (d == bottom) continue;
      std::vector<bool> in_s(m, false);
      for (auto i : s) in_s[i] = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (in_s[i]) continue;
        std::vector<std::size_t> t = s;
        t.push_back(i);
        auto g_set = gens_of(t);
        if (g_set.empty()) continue;
        if (face_dim(g_set) != d - 1) continue;
        next.insert(closure(g_set));
      }
    }
    level = std::move(next);
  }
  for (auto& faces : out) std::sort(faces.begin(), faces.end(), PolyhedronLess{});
  return out;
}

Polyhedron Polyhedron::link_at(const RatVector& x) const {
  if (!contains(x)) throw PreconditionError("Polyhedron::link_at: point not contained");
  std::vector<Halfspace> ineqs, eqs;
  for (const auto& f : ineqs_)
    if (dot(f.normal, x) == Rational(f.rhs)) ineqs.push_back({f.normal, Integer(0)});
  for (const auto& e : eqs_) eqs.push_back({e.normal, Integer(0)});
  return from_h(n_, ineqs, eqs);
}

Polyhedron Polyhedron::recession_cone() const {
  if (empty_) return *this;
  Homog h;
  h.gens.push_back(hom_point(RatVector(n_, Rational(0))));
  for (const auto& r : rays_) h.gens.push_back(hom_direction(r));
  for (const auto& l : lineality_) h.lin.push_back(hom_direction(l));
  for (const auto& f : ineqs_) h.ineqs.push_back(hom_ineq({f.normal, Integer(0)}));
  return finalize(n_, std::move(h), true, false);
}

Polyhedron Polyhedron::translated(const RatVector& shift) const {
  check_dim(n_, shift.size(), "Polyhedron::translated");
  if (empty_) return *this;
  Homog h;
  for (const auto& v : vertices_) h.gens.push_back(hom_point(add(v, shift)));
  for (const auto& r : rays_) h.gens.push_back(hom_direction(r));
  for (const auto& l : lineality_) h.lin.push_back(hom_direction(l));
  for (const auto& f : ineqs_) {
    Rational b = Rational(f.rhs) + dot(f.normal, shift);
    h.ineqs.push_back(hom_ineq(make_halfspace(to_rational(f.normal), b)));
  }
  return finalize(n_, std::move(h), true, true);
}

Polyhedron Polyhedron::image(const IntMatrix& a) const {
  if (a.cols() != n_) throw DimensionMismatch("Polyhedron::image: matrix columns");
  if (empty_) return empty(a.rows());
  std::vector<RatVector> verts;
  std::vector<IntVector> rays, lin;
  for (const auto& v : vertices_) verts.push_back(a.apply(v));
  for (const auto& r : rays_) rays.push_back(a.apply(r));
  for (const auto& l : lineality_) lin.push_back(a.apply(l));
  return from_v(a.rows(), verts, rays, lin);
}

Polyhedron Polyhedron::image(const std::vector<RatVector>& rows) const {
  for (const auto& r : rows) check_dim(n_, r.size(), "Polyhedron::image");
  if (empty_) return empty(rows.size());
  auto apply = [&](const RatVector& x) {
    RatVector y(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) y[i] = dot(rows[i], x);
    return y;
  };
  std::vector<RatVector> verts;
  std::vector<IntVector> rays, lin;
  for (const auto& v : vertices_) verts.push_back(apply(v));
  for (const auto& r : rays_) rays.push_back(integer_direction(apply(to_rational(r))));
  for (const auto& l : lineality_) lin.push_back(integer_direction(apply(to_rational(l))));
  return from_v(rows.size(), verts, rays, lin);
}

Polyhedron Polyhedron::plus_span(const std::vector<IntVector>& directions) const {
  if (empty_) return *this;
  std::vector<IntVector> lin = lineality_;
  lin.insert(lin.end(), directions.begin(), directions.end());
  return from_v(n_, vertices_, rays_, lin);
}

int Polyhedron::compare(const Polyhedron& o) const {
  if (n_ != o.n_) return n_ < o.n_ ? -1 : 1;
  if (empty_ != o.empty_) return empty_ ? -1 : 1;
  if (empty_) return 0;
  auto cmp_lists = [](const auto& a, const auto& b, auto cmpf) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = cmpf(a[i], b[i]);
      if (c != 0) return c;
    }
    return 0;
  };
  int c = cmp_lists(lineality_, o.lineality_, compare_int);
  if (c != 0) return c;
  c = cmp_lists(rays_, o.rays_, compare_int);
  if (c != 0) return c;
  return cmp_lists(vertices_, o.vertices_, compare_rat);
}

std::string Polyhedron::to_string() const {
  std::ostringstream os;
  if (empty_) {
    os << "empty(" << n_ << ")";
    return os.str();
  }
  os << "conv{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? " " : "") << tropical::to_string(vertices_[i]);
  os << "} + cone{";
  for (std::size_t i = 0; i < rays_.size(); ++i) os << (i ? " " : "") << tropical::to_string(rays_[i]);
  os << "} + span{";
  for (std::size_t i = 0; i < lineality_.size(); ++i) os << (i ? " " : "") << tropical::to_string(lineality_[i]);
  os << "}";
  return os.str();
}

HRep to_h(const VRep& v) {
  if (v.vertices.empty()) throw ValidationError("to_h: empty V-representation");
  return Polyhedron::from_v(v.ambient_dim, v.vertices, v.rays, v.lineality).h_rep();
}

VRep to_v(const HRep& h) { return Polyhedron::from_h(h.ambient_dim, h.inequalities, h.equations).v_rep(); }

Polyhedron dual_convert(const Polyhedron& p) { return p; }

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
  check_dim(p.ambient_dim(), q.ambient_dim(), "intersect");
  const std::size_t n = p.ambient_dim();
  if (p.is_empty() || q.is_empty()) return Polyhedron::empty(n);
  const RatVector origin(n, Rational(0));
  if (!(p.contains(origin) && q.contains(origin))) {
    lp::LinearProgram prog(n);
    for (const auto* s : {&p, &q}) {
      for (const auto& f : s->inequalities()) prog.add_le(to_rational(f.normal), Rational(f.rhs));
      for (const auto& e : s->equations()) prog.add_eq(to_rational(e.normal), Rational(e.rhs));
    }
    if (!lp::feasible(prog)) return Polyhedron::empty(n);
  }
  std::vector<Halfspace> ineqs = p.inequalities(), eqs = p.equations();
  ineqs.insert(ineqs.end(), q.inequalities().begin(), q.inequalities().end());
  eqs.insert(eqs.end(), q.equations().begin(), q.equations().end());
  return Polyhedron::from_h(n, ineqs, eqs);
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
  check_dim(p.ambient_dim(), q.ambient_dim(), "minkowski_sum");
  if (p.is_empty() || q.is_empty()) return Polyhedron::empty(p.ambient_dim());
  std::vector<RatVector> verts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) verts.push_back(add(a, b));
  std::vector<IntVector> rays = p.rays(), lin = p.lineality();
  rays.insert(rays.end(), q.rays().begin(), q.rays().end());
  lin.insert(lin.end(), q.lineality().begin(), q.lineality().end());
  return Polyhedron::from_v(p.ambient_dim(), verts, rays, lin);
}

Polyhedron negated(const Polyhedron& p) {
  IntMatrix m = IntMatrix::identity(p.ambient_dim());
  for (std::size_t i = 0; i < p.ambient_dim(); ++i) m(i, i) = -1;
  return p.image(m);
}

Polyhedron cartesian_product(const Polyhedron& p, const Polyhedron& q) {
  const std::size_t a = p.ambient_dim(), b = q.ambient_dim();
  if (p.is_empty() || q.is_empty()) return Polyhedron::empty(a + b);
  std::vector<RatVector> verts;
  for (const auto& u : p.vertices())
    for (const auto& w : q.vertices()) {
      RatVector x = u;
      x.insert(x.end(), w.begin(), w.end());
      verts.push_back(std::move(x));
    }
  auto pad = [&](const IntVector& v, bool left) {
    IntVector x(a + b, Integer(0));
    for (std::size_t i = 0; i < v.size(); ++i) x[left ? i : a + i] = v[i];
    return x;
  };
  std::vector<IntVector> rays, lin;
  for (const auto& r : p.rays()) rays.push_back(pad(r, true));
  for (const auto& r : q.rays()) rays.push_back(pad(r, false));
  for (const auto& l : p.lineality()) lin.push_back(pad(l, true));
  for (const auto& l : q.lineality()) lin.push_back(pad(l, false));
  return Polyhedron::from_v(a + b, verts, rays, lin);
}

bool is_face(const Polyhedron& p, const Polyhedron& q) {
  if (p.is_empty()) return true;
  if (!q.contains(p)) return false;
  return q.minimal_face(p.relative_interior_point()) == p;
}

bool membership_in_sum(const Polyhedron& p, const Polyhedron& q, const RatVector& v) {
  check_dim(p.ambient_dim(), q.ambient_dim(), "membership_in_sum");
  check_dim(p.ambient_dim(), v.size(), "membership_in_sum");
  const std::size_t n = p.ambient_dim();
  if (p.is_empty() || q.is_empty()) return false;
  // Variables (x, y) with x in p, y in q, x - y = v.
  lp::LinearProgram prog(2 * n);
  auto lift = [&](const IntVector& a, std::size_t off) {
    RatVector r(2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) r[off + i] = a[i];
    return r;
  };
  for (const auto& f : p.inequalities()) prog.add_le(lift(f.normal, 0), Rational(f.rhs));
  for (const auto& e : p.equations()) prog.add_eq(lift(e.normal, 0), Rational(e.rhs));
  for (const auto& f : q.inequalities()) prog.add_le(lift(f.normal, n), Rational(f.rhs));
  for (const auto& e : q.equations()) prog.add_eq(lift(e.normal, n), Rational(e.rhs));
  for (std::size_t i = 0; i < n; ++i) {
    RatVector r(2 * n, Rational(0));
    r[i] = 1;
    r[n + i] = -1;
    prog.add_eq(std::move(r), v[i]);
  }
  return lp::feasible(prog);
}

}  // namespace tropical
