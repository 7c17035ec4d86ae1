#include "tropical/connectivity.hpp"

#include "tropical/error.hpp"
#include "tropical/polytope.hpp"
#include "tropical/stable_intersection.hpp"

#include <algorithm>
#include <deque>

namespace tropical {

FacetGraph FacetGraph::build(const PolyhedralComplex& x) {
  if (!x.is_pure()) throw ValidationError("connectivity needs a pure complex");
  FacetGraph g;
  g.facets = refined(x).cells();
  const std::size_t m = g.facets.size();
  g.adjacency.assign(m, {});
  if (m == 0) return g;
  const int d = g.facets.front().dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto r = intersect(g.facets[i], g.facets[j]);
      if (r.is_empty() || r.dim() != d - 1) continue;
      g.adjacency[i].push_back(j);
      g.adjacency[j].push_back(i);
    }
  return g;
}

std::vector<std::vector<std::size_t>> FacetGraph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(facets.size(), false);
  for (std::size_t s = 0; s < facets.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (auto w : adjacency[v])
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

ConnectivityReport is_connected_codim1(const PolyhedralComplex& x) {
  const auto g = FacetGraph::build(x);
  ConnectivityReport r;
  r.components = g.components();
  r.connected = r.components.size() <= 1;
  r.facets = g.facets;
  return r;
}

ConnectivityReport is_connected_codim1(const TropicalCycle& x) { return is_connected_codim1(x.support()); }

PolyhedralComplex union_support(const std::vector<PolyhedralComplex>& parts) {
  if (parts.empty()) return {};
  PolyhedralComplex acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = union_refinement(acc, parts[i]);
  return acc;
}

bool Example62Report::all_claims_hold() const {
  return t1_connected && t2_connected && union_connected && union_contains_negative_quadrant &&
         slice_intersection_is_origin && sliced_union_disconnected;
}

namespace {

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool some_cell_contains(const TropicalCycle& x, const Polyhedron& c) {
  return std::any_of(x.cells().begin(), x.cells().end(), [&](const Polyhedron& s) { return s.contains(c); });
}

}  // namespace

Example62Report example_6_2() {
  const std::size_t n = 5;
  const RationalPolytope p1(n, {rv({0, 0, 0, 0, 0}), rv({1, 0, 0, 0, 0}), rv({0, 1, 0, 0, 0}), rv({0, 0, 1, 0, 0}),
                                rv({0, 0, 0, 1, 0}), rv({0, 0, 0, 0, 1})});
  const RationalPolytope p2(n, {rv({0, 0, 0, 0, 0}), rv({1, 0, 0, 1, 0}), rv({0, 1, 0, 0, 1}), rv({0, 0, 2, 3, 0}),
                                rv({0, 0, 0, 4, 7}), rv({0, 0, 6, 0, 1})});
  const auto seg = RationalPolytope::segment(rv({0, 0, 0, 0, 0}), rv({1, 1, 1, 1, 1}));

  Example62Report r;
  r.t1 = stable_power(tropical_hypersurface(p1), 2);
  r.t2 = stable_power(tropical_hypersurface(p2), 2);
  r.h = tropical_hypersurface(seg);
  r.t1h = stable_intersection(r.t1, r.h);
  r.t2h = stable_intersection(r.t2, r.h);

  r.t1_connected = is_connected_codim1(r.t1).connected;
  r.t2_connected = is_connected_codim1(r.t2).connected;
  r.union_connected = is_connected_codim1(union_support({r.t1.support(), r.t2.support()})).connected;
  const auto quadrant = Polyhedron::cone(n, {{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}});
  r.union_contains_negative_quadrant = some_cell_contains(r.t1, quadrant) && some_cell_contains(r.t2, quadrant);

  bool only_origin = true;
  for (const auto& a : r.t1h.cells())
    for (const auto& b : r.t2h.cells()) {
      const auto c = intersect(a, b);
      if (c.is_empty()) continue;
      if (std::find(r.slice_intersection.begin(), r.slice_intersection.end(), c) == r.slice_intersection.end())
        r.slice_intersection.push_back(c);
      if (c != Polyhedron::point(RatVector(n, Rational(0)))) only_origin = false;
    }
  r.slice_intersection_is_origin = only_origin && !r.slice_intersection.empty();

  const auto sliced = is_connected_codim1(union_support({r.t1h.support(), r.t2h.support()}));
  r.sliced_union_disconnected = !sliced.connected;
  r.sliced_union_components = sliced.components.size();
  return r;
}

}  // namespace tropical
