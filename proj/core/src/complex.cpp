#include "tropical/complex.hpp"

#include "tropical/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

namespace tropical {

namespace {

// A constraint of `b` that some point of `g` violates, as normal . x <= rhs.
std::optional<Halfspace> violated_constraint(const Polyhedron& g, const Polyhedron& b) {
  auto violates = [&](const IntVector& a, const Integer& rhs) {
    for (const auto& v : g.vertices())
      if (dot(a, v) > Rational(rhs)) return true;
    for (const auto& r : g.rays())
      if (dot(a, r) > 0) return true;
    for (const auto& l : g.lineality())
      if (dot(a, l) != 0) return true;
    return false;
  };
  for (const auto& f : b.inequalities())
    if (violates(f.normal, f.rhs)) return f;
  for (const auto& e : b.equations()) {
    if (violates(e.normal, e.rhs)) return e;
    IntVector neg = negated(e.normal);
    if (violates(neg, -e.rhs)) return Halfspace{neg, -e.rhs};
  }
  return std::nullopt;
}

// Pieces of `a` on both sides of a hyperplane of `b`, when a ∩ b is not a face of a.
std::optional<std::pair<Polyhedron, Polyhedron>> split_against(const Polyhedron& a, const Polyhedron& b,
                                                                const Polyhedron& meet) {
  if (is_face(meet, a)) return std::nullopt;
  Polyhedron g = a.minimal_face(meet.relative_interior_point());
  auto h = violated_constraint(g, b);
  if (!h) throw InternalError("make_proper: no separating constraint found");
  const std::size_t n = a.ambient_dim();
  Halfspace opposite{negated(h->normal), -h->rhs};
  return std::make_pair(intersect(a, Polyhedron::from_h(n, {*h})),
                        intersect(a, Polyhedron::from_h(n, {opposite})));
}

}  // namespace

std::vector<WeightedCell> make_proper(const std::vector<WeightedCell>& cells, bool drop_zero) {
  std::vector<WeightedCell> done;
  std::deque<WeightedCell> pending;
  for (const auto& c : cells)
    if (!c.cell.is_empty()) pending.push_back(c);
  while (!pending.empty()) {
    WeightedCell c = std::move(pending.front());
    pending.pop_front();
    bool consumed = false;
    for (std::size_t k = 0; k < done.size();) {
      if (c.cell == done[k].cell) {
        done[k].weight += c.weight;
        consumed = true;
        break;
      }
      Polyhedron meet = intersect(c.cell, done[k].cell);
      if (meet.is_empty()) {
        ++k;
        continue;
      }
      if (auto pieces = split_against(c.cell, done[k].cell, meet)) {
        pending.push_back({pieces->first, c.weight});
        pending.push_back({pieces->second, c.weight});
        consumed = true;
        break;
      }
      if (auto pieces = split_against(done[k].cell, c.cell, meet)) {
        pending.push_back({pieces->first, done[k].weight});
        pending.push_back({pieces->second, done[k].weight});
        done.erase(done.begin() + static_cast<long>(k));
        continue;
      }
      ++k;
    }
    if (!consumed) done.push_back(std::move(c));
  }
  std::vector<WeightedCell> out;
  for (auto& c : done)
    if (!drop_zero || c.weight != 0) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const WeightedCell& a, const WeightedCell& b) { return a.cell < b.cell; });
  return out;
}

PolyhedralComplex::PolyhedralComplex(std::size_t ambient_dim, std::vector<Polyhedron> cells) : n_(ambient_dim) {
  for (auto& c : cells) {
    if (c.ambient_dim() != n_) throw DimensionMismatch("PolyhedralComplex: cell ambient dimension");
    if (!c.is_empty()) cells_.push_back(std::move(c));
  }
  std::sort(cells_.begin(), cells_.end(), PolyhedronLess{});
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool PolyhedralComplex::is_fan() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Polyhedron& c) { return c.is_cone(); });
}

bool PolyhedralComplex::is_pure() const {
  for (const auto& c : cells_)
    if (c.dim() != cells_.front().dim()) return false;
  return true;
}

int PolyhedralComplex::dim() const {
  int d = -1;
  for (const auto& c : cells_) d = std::max(d, c.dim());
  return d;
}

bool PolyhedralComplex::is_proper() const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (std::size_t j = i + 1; j < cells_.size(); ++j) {
      Polyhedron m = intersect(cells_[i], cells_[j]);
      if (m.is_empty()) continue;
      if (!is_face(m, cells_[i]) || !is_face(m, cells_[j])) return false;
    }
  return true;
}

std::vector<Polyhedron> PolyhedralComplex::ridges() const {
  std::vector<Polyhedron> out;
  for (const auto& c : cells_)
    for (auto& f : c.facets()) out.push_back(std::move(f));
  std::sort(out.begin(), out.end(), PolyhedronLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool PolyhedralComplex::support_contains(const RatVector& x) const {
  return std::any_of(cells_.begin(), cells_.end(), [&](const Polyhedron& c) { return c.contains(x); });
}

PolyhedralComplex common_refinement(const PolyhedralComplex& x, const PolyhedralComplex& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionMismatch("common_refinement: ambient dimensions differ");
  std::vector<Polyhedron> meets;
  for (const auto& s : x.cells())
    for (const auto& t : y.cells()) {
      Polyhedron m = intersect(s, t);
      if (!m.is_empty()) meets.push_back(std::move(m));
    }
  std::sort(meets.begin(), meets.end(), PolyhedronLess{});
  meets.erase(std::unique(meets.begin(), meets.end()), meets.end());
  std::vector<Polyhedron> maximal;
  for (std::size_t i = 0; i < meets.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < meets.size() && !covered; ++j)
      if (i != j && meets[j].dim() > meets[i].dim() && meets[j].contains(meets[i])) covered = true;
    if (!covered) maximal.push_back(meets[i]);
  }
  return PolyhedralComplex(x.ambient_dim(), std::move(maximal));
}

PolyhedralComplex union_refinement(const PolyhedralComplex& x, const PolyhedralComplex& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw DimensionMismatch("union_refinement: ambient dimensions differ");
  std::vector<WeightedCell> cells;
  for (const auto& c : x.cells()) cells.push_back({c, 1});
  for (const auto& c : y.cells()) cells.push_back({c, 1});
  auto proper = make_proper(cells, false);
  std::vector<Polyhedron> out;
  for (auto& c : proper) out.push_back(std::move(c.cell));
  // Lower-dimensional pieces lying inside larger cells are not maximal.
  std::vector<Polyhedron> maximal;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < out.size() && !covered; ++j)
      if (i != j && out[j].dim() > out[i].dim() && out[j].contains(out[i])) covered = true;
    if (!covered) maximal.push_back(out[i]);
  }
  return PolyhedralComplex(x.ambient_dim(), std::move(maximal));
}

PolyhedralComplex refined(const PolyhedralComplex& x) {
  return union_refinement(x, PolyhedralComplex(x.ambient_dim(), {}));
}

}  // namespace tropical
