#include "tropical/cycle.hpp"

#include "tropical/error.hpp"
#include "tropical/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tropical {

namespace {

void require_pure(const std::vector<Polyhedron>& cells) {
  for (const auto& c : cells)
    if (c.dim() != cells.front().dim()) throw ValidationError("cycle cells are not pure-dimensional");
}

RatVector zero_vector(std::size_t n) { return RatVector(n, Rational(0)); }

}  // namespace

TropicalCycle TropicalCycle::zero(std::size_t n, int dim) {
  TropicalCycle c;
  c.n_ = n;
  c.dim_ = dim;
  return c;
}

TropicalCycle TropicalCycle::ambient(std::size_t n, const Rational& mult) {
  return from_proper_cells(n, {Polyhedron::whole(n)}, {mult}, static_cast<int>(n));
}

TropicalCycle TropicalCycle::linear_space(std::size_t n, const std::vector<IntVector>& basis, const Rational& mult) {
  const auto l = Polyhedron::linear_space(n, basis);
  return from_proper_cells(n, {l}, {mult}, l.dim());
}

TropicalCycle TropicalCycle::from_cells(std::size_t n, const std::vector<Polyhedron>& cells,
                                        const std::vector<Rational>& mults) {
  if (cells.size() != mults.size()) throw ValidationError("cells and multiplicities differ in length");
  std::vector<WeightedCell> w;
  int d = -1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].ambient_dim() != n) throw DimensionMismatch("cell ambient dimension differs from cycle");
    if (cells[i].is_empty()) continue;
    d = std::max(d, cells[i].dim());
    w.push_back({cells[i], mults[i]});
  }
  require_pure([&] {
    std::vector<Polyhedron> cs;
    for (const auto& x : w) cs.push_back(x.cell);
    return cs;
  }());
  return from_weighted(n, w, d);
}

TropicalCycle TropicalCycle::from_weighted(std::size_t n, const std::vector<WeightedCell>& cells, int dim_if_zero) {
  const auto proper = make_proper(cells, true);
  std::vector<Polyhedron> cs;
  std::vector<Rational> ms;
  for (const auto& c : proper) {
    cs.push_back(c.cell);
    ms.push_back(c.weight);
  }
  return from_proper_cells(n, std::move(cs), std::move(ms), dim_if_zero);
}

TropicalCycle TropicalCycle::from_proper_cells(std::size_t n, std::vector<Polyhedron> cells, std::vector<Rational> mults,
                                               int dim_if_zero) {
  if (cells.size() != mults.size()) throw ValidationError("cells and multiplicities differ in length");
  std::map<Polyhedron, Rational, PolyhedronLess> merged;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].ambient_dim() != n) throw DimensionMismatch("cell ambient dimension differs from cycle");
    if (cells[i].is_empty()) continue;
    merged[cells[i]] += mults[i];
  }
  TropicalCycle c;
  c.n_ = n;
  c.dim_ = dim_if_zero;
  for (auto& [cell, m] : merged) {
    if (m == 0) continue;
    c.cells_.push_back(cell);
    c.mults_.push_back(m);
  }
  if (!c.cells_.empty()) {
    require_pure(c.cells_);
    c.dim_ = c.cells_.front().dim();
  }
  return c;
}

bool TropicalCycle::is_fan() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Polyhedron& p) { return p.is_cone(); });
}

bool TropicalCycle::has_integer_multiplicities() const {
  return std::all_of(mults_.begin(), mults_.end(), [](const Rational& m) { return is_integer(m); });
}

std::vector<IntVector> TropicalCycle::lineality_basis() const {
  std::vector<IntVector> normals;
  for (const auto& c : cells_) {
    auto k = linalg::kernel(c.lineality(), n_);
    normals.insert(normals.end(), k.begin(), k.end());
  }
  return linalg::canonical_span_basis(linalg::kernel(normals, n_), n_);
}

LatticeSubgroup TropicalCycle::lineality() const { return LatticeSubgroup::saturated_span(n_, lineality_basis()); }

bool TropicalCycle::support_contains(const RatVector& x) const {
  return std::any_of(cells_.begin(), cells_.end(), [&](const Polyhedron& p) { return p.contains(x); });
}

Rational TropicalCycle::multiplicity_at(const RatVector& x) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].in_relative_interior(x)) return mults_[i];
  return 0;
}

TropicalCycle TropicalCycle::scaled(const Rational& s) const {
  if (s == 0) return zero(n_, dim_);
  TropicalCycle c = *this;
  for (auto& m : c.mults_) m *= s;
  return c;
}

std::string TropicalCycle::to_string() const {
  std::ostringstream os;
  os << "TropicalCycle(n=" << n_ << ", dim=" << dim_ << ", cells=" << cells_.size() << ")\n";
  for (std::size_t i = 0; i < cells_.size(); ++i)
    os << "  [" << format_rational(mults_[i]) << "] " << cells_[i].to_string() << "\n";
  return os.str();
}

IntVector lattice_normal(const Polyhedron& sigma, const Polyhedron& tau) {
  const auto ns = sigma.direction_lattice();
  const auto nt = tau.direction_lattice();
  if (ns.rank() != nt.rank() + 1) throw PreconditionError("lattice_normal: tau is not a facet of sigma");
  const std::size_t k = ns.rank();
  // Functional on N_sigma coordinates vanishing on N_tau.
  std::vector<IntVector> coords;
  for (const auto& b : nt.basis()) {
    auto c = ns.coordinates(b);
    if (!c) throw PreconditionError("lattice_normal: tau is not contained in sigma");
    coords.push_back(*c);
  }
  IntVector f;
  if (coords.empty()) {
    f = IntVector{1};
  } else {
    const auto ker = integer_kernel(IntMatrix::from_rows(coords, k));
    if (ker.size() != 1) throw InternalError("lattice_normal: unexpected kernel rank");
    f = primitive(ker.front());
  }
  // Bezout vector u with f . u = 1.
  const auto h = row_hnf(IntMatrix::from_columns({f}, k));
  const IntVector u = h.transform.row(0);
  IntVector w(sigma.ambient_dim(), Integer(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += u[j] * ns.basis()[j][i];
  const auto d = sub(sigma.relative_interior_point(), tau.relative_interior_point());
  const auto hvec = linalg::project_to_complement(d, tau.direction_basis());
  if (dot(w, hvec) < 0) w = negated(w);
  return w;
}

BalanceReport is_balanced(const TropicalCycle& x) {
  BalanceReport report;
  std::map<Polyhedron, RatVector, PolyhedronLess> sums;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& sigma = x.cells()[i];
    for (const auto& tau : sigma.facets()) {
      auto [it, inserted] = sums.try_emplace(tau, zero_vector(x.ambient_dim()));
      const auto v = lattice_normal(sigma, tau);
      for (std::size_t j = 0; j < v.size(); ++j) it->second[j] += x.mults()[i] * v[j];
    }
  }
  for (const auto& [tau, s] : sums) {
    const auto basis = tau.direction_basis();
    const bool ok = basis.empty() ? is_zero(s) : linalg::in_span(basis, s);
    if (!ok) {
      report.balanced = false;
      report.failing_ridges.push_back(tau);
    }
  }
  return report;
}

TropicalCycle link_cycle(const TropicalCycle& x, const RatVector& omega) {
  if (omega.size() != x.ambient_dim()) throw DimensionMismatch("link point has wrong dimension");
  std::vector<Polyhedron> cells;
  std::vector<Rational> mults;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.cells()[i].contains(omega)) continue;
    cells.push_back(x.cells()[i].link_at(omega));
    mults.push_back(x.mults()[i]);
  }
  if (cells.empty() && !x.is_zero()) throw PreconditionError("link point is not in the support");
  return TropicalCycle::from_proper_cells(x.ambient_dim(), std::move(cells), std::move(mults), x.dim());
}

IntMatrix quotient_map(const LatticeSubgroup& l) {
  const std::size_t n = l.ambient_rank();
  const auto sat = l.saturation();
  const std::size_t r = sat.rank();
  IntMatrix q(n - r, n);
  if (r == 0) return IntMatrix::identity(n);
  const auto h = row_hnf(sat.generator_matrix());
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i - r, j) = h.transform(i, j);
  return q;
}

TropicalCycle quotient_by_lineality(const TropicalCycle& x, const LatticeSubgroup& l) {
  if (l.ambient_rank() != x.ambient_dim()) throw DimensionMismatch("lineality subgroup has wrong ambient rank");
  const auto lin = x.lineality_basis();
  for (const auto& b : l.basis())
    if (lin.empty() || !linalg::in_span(lin, b))
      throw PreconditionError("quotient space is not contained in the lineality of the cycle");
  const auto q = quotient_map(l);
  const int r = static_cast<int>(l.saturation().rank());
  std::vector<Polyhedron> cells;
  for (const auto& c : x.cells()) cells.push_back(c.image(q));
  return TropicalCycle::from_proper_cells(q.rows(), std::move(cells), x.mults(), x.dim() < 0 ? -1 : x.dim() - r);
}

TropicalCycle cycle_sum(const TropicalCycle& x, const TropicalCycle& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionMismatch("cycle_sum: ambient dimensions differ");
  if (x.is_zero()) return y.is_zero() && y.dim() < 0 ? TropicalCycle::zero(x.ambient_dim(), x.dim()) : y;
  if (y.is_zero()) return x;
  if (x.dim() != y.dim()) throw DimensionMismatch("cycle_sum: codimensions differ");
  std::vector<WeightedCell> w;
  for (std::size_t i = 0; i < x.size(); ++i) w.push_back({x.cells()[i], x.mults()[i]});
  for (std::size_t i = 0; i < y.size(); ++i) w.push_back({y.cells()[i], y.mults()[i]});
  return TropicalCycle::from_weighted(x.ambient_dim(), w, x.dim());
}

TropicalCycle cartesian_product(const TropicalCycle& x, const TropicalCycle& y) {
  const std::size_t n = x.ambient_dim() + y.ambient_dim();
  const int d = x.dim() < 0 || y.dim() < 0 ? -1 : x.dim() + y.dim();
  std::vector<Polyhedron> cells;
  std::vector<Rational> mults;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      cells.push_back(cartesian_product(x.cells()[i], y.cells()[j]));
      mults.push_back(x.mults()[i] * y.mults()[j]);
    }
  return TropicalCycle::from_proper_cells(n, std::move(cells), std::move(mults), d);
}

TropicalCycle pushforward(const IntMatrix& a, const TropicalCycle& x) {
  if (a.cols() != x.ambient_dim()) throw DimensionMismatch("pushforward: matrix columns differ from ambient dimension");
  const std::size_t m = a.rows();
  const std::size_t n = x.ambient_dim();
  // Directions of the lineality collapsed by A do not count against finiteness.
  std::vector<IntVector> rows = a.row_vectors();
  const auto lin = x.lineality_basis();
  std::size_t collapsed = 0;
  if (!lin.empty()) {
    std::vector<IntVector> eqs = rows;
    auto lin_normals = linalg::kernel(lin, n);
    eqs.insert(eqs.end(), lin_normals.begin(), lin_normals.end());
    collapsed = linalg::kernel(eqs, n).size();
  }
  if (x.is_zero()) return TropicalCycle::zero(m, x.dim() < 0 ? -1 : x.dim() - static_cast<int>(collapsed));
  const int expected = x.dim() - static_cast<int>(collapsed);
  std::vector<WeightedCell> w;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto img = x.cells()[i].image(a);
    if (img.dim() != expected) continue;
    const auto target = LatticeSubgroup::saturated_span(m, img.direction_basis());
    const auto source = image_lattice(a, x.cells()[i].direction_lattice());
    const auto idx = lattice_index(target, source);
    w.push_back({img, x.mults()[i] * Rational(idx.value())});
  }
  if (w.empty()) throw PreconditionError("pushforward: map is not generically finite-to-one on the cycle");
  return TropicalCycle::from_weighted(m, w, expected);
}

bool cycles_equal(const TropicalCycle& x, const TropicalCycle& y) {
  if (x.ambient_dim() != y.ambient_dim()) return false;
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.dim() != y.dim()) return false;
  std::vector<WeightedCell> w;
  for (std::size_t i = 0; i < x.size(); ++i) w.push_back({x.cells()[i], x.mults()[i]});
  for (std::size_t i = 0; i < y.size(); ++i) w.push_back({y.cells()[i], -y.mults()[i]});
  return make_proper(w, true).empty();
}

Rational origin_multiplicity(const TropicalCycle& x) { return x.multiplicity_at(zero_vector(x.ambient_dim())); }

TropicalCycle translated(const TropicalCycle& x, const RatVector& shift) {
  std::vector<Polyhedron> cells;
  for (const auto& c : x.cells()) cells.push_back(c.translated(shift));
  return TropicalCycle::from_proper_cells(x.ambient_dim(), std::move(cells), x.mults(), x.dim());
}

TropicalCycle plus_span(const TropicalCycle& x, const std::vector<IntVector>& directions) {
  const std::size_t n = x.ambient_dim();
  const auto nl = LatticeSubgroup::saturated_span(n, directions);
  const int expected = x.dim() < 0 ? -1 : std::min<int>(static_cast<int>(n), x.dim() + static_cast<int>(nl.rank()));
  std::vector<WeightedCell> w;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto c = x.cells()[i].plus_span(directions);
    if (c.dim() != expected) continue;
    const auto sum = sum_lattices(x.cells()[i].direction_lattice(), nl);
    const auto idx = lattice_index(c.direction_lattice(), sum);
    w.push_back({c, x.mults()[i] * Rational(idx.value())});
  }
  return TropicalCycle::from_weighted(n, w, expected);
}

AvoidedSubspace AvoidedSubspace::from_span(std::size_t n, const std::vector<IntVector>& spanning) {
  return {linalg::kernel(spanning, n)};
}

bool AvoidedSubspace::contains(const RatVector& v) const {
  return std::all_of(normals.begin(), normals.end(), [&](const IntVector& a) { return dot(a, v) == 0; });
}

bool GenericVector::verify() const {
  return std::none_of(certificate.begin(), certificate.end(), [&](const AvoidedSubspace& s) { return s.contains(v); });
}

GenericVector pick_generic_vector(std::size_t n, std::vector<AvoidedSubspace> avoid) {
  for (const auto& s : avoid)
    if (std::all_of(s.normals.begin(), s.normals.end(), [](const IntVector& a) { return is_zero(a); }))
      throw PreconditionError("cannot avoid a subspace equal to the whole space");
  GenericVector g;
  g.certificate = std::move(avoid);
  if (n == 0) return g;
  unsigned long p = 2;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    RatVector v(n);
    Integer power = 1;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = power;
      power *= p;
    }
    g.v = std::move(v);
    if (g.verify()) return g;
    // next prime
    for (++p;; ++p) {
      bool prime = true;
      for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) {
          prime = false;
          break;
        }
      if (prime) break;
    }
  }
  throw InternalError("generic vector search exhausted");
}

}  // namespace tropical
