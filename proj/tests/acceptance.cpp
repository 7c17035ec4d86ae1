// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if any fails.
#include "support/oracles.hpp"
#include "support/random.hpp"

#include "tropical/connectivity.hpp"
#include "tropical/cycle.hpp"
#include "tropical/error.hpp"
#include "tropical/lattice.hpp"
#include "tropical/polytope.hpp"
#include "tropical/polytope_algebra.hpp"
#include "tropical/stable_intersection.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace tropical;
using namespace testing_support;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail << "first failure: " << what << "; ";
    }
  }
};

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool shape_ok(const TropicalCycle& x, const TropicalCycle& y, const TropicalCycle& r) {
  const int expected = x.dim() + y.dim() - static_cast<int>(x.ambient_dim());
  if (!r.is_zero() && r.dim() != expected) return false;
  return is_balanced(r).balanced;
}

// ---------------------------------------------------------------------------

void example_62(Outcome& o) {
  const auto r = example_6_2();
  o.require(r.slice_intersection_is_origin, "supp(T1.H) ∩ supp(T2.H) is not {0}");
  o.require(r.sliced_union_disconnected, "(T1.H) ∪ (T2.H) is connected through codimension one");
  o.detail << "T1 " << r.t1.size() << " facets, T2 " << r.t2.size() << " facets; T1, T2 connected: " << r.t1_connected
           << r.t2_connected << "; T1∪T2 connected: " << r.union_connected << "; sliced union components "
           << r.sliced_union_components;
}

void volume_theorem(Outcome& o) {
  std::mt19937 rng(20240601);
  int count = 0;
  for (std::size_t d : {2u, 3u})
    for (int i = 0; i < 25; ++i) {
      const auto p = random_polytope(rng, d, static_cast<std::size_t>(uniform(rng, d + 1, 8)));
      const auto trop = normalized_volume(p);
      const auto ref = oracle::normalized_volume(to_oracle(p));
      o.require(trop == ref, "volume mismatch on " + std::to_string(d) + "-polytope with " +
                                 std::to_string(p.vertices().size()) + " vertices: " + format_rational(trop) + " vs " +
                                 ref.get_str());
      ++count;
    }
  o.detail << count << " polytopes";
}

void mixed_volumes(Outcome& o) {
  const auto d2 = RationalPolytope::simplex(2);
  const auto e1 = RationalPolytope::segment(rv({0, 0}), rv({1, 0}));
  const auto e2 = RationalPolytope::segment(rv({0, 0}), rv({0, 1}));
  o.require(mixed_volume({d2, d2}) == 1, "MV(Δ2, Δ2) != 1");
  o.require(mixed_volume({d2.dilated(2), d2.dilated(2)}) == 4, "MV(2Δ2, 2Δ2) != 4");
  o.require(mixed_volume({e1, e2}) == 1, "MV([0,e1], [0,e2]) != 1");
  std::mt19937 rng(777);
  int count = 0;
  for (int i = 0; i < 12; ++i) {
    std::vector<RationalPolytope> ps{random_positive_dim_polytope(rng, 2, 5), random_positive_dim_polytope(rng, 2, 5)};
    const auto trop = mixed_volume(ps);
    const auto ref = oracle::mixed_volume({to_oracle(ps[0]), to_oracle(ps[1])});
    o.require(trop == ref, "2D mixed volume mismatch " + format_rational(trop) + " vs " + ref.get_str());
    ++count;
  }
  for (int i = 0; i < 10; ++i) {
    std::vector<RationalPolytope> ps;
    for (int j = 0; j < 3; ++j) ps.push_back(random_positive_dim_polytope(rng, 3, 4, 2));
    const auto trop = mixed_volume(ps);
    const auto ref = oracle::mixed_volume({to_oracle(ps[0]), to_oracle(ps[1]), to_oracle(ps[2])});
    o.require(trop == ref, "3D mixed volume mismatch " + format_rational(trop) + " vs " + ref.get_str());
    ++count;
  }
  o.detail << "3 fixed instances + " << count << " random (12 pairs in R^2, 10 triples in R^3)";
}

struct CyclePair {
  TropicalCycle x, y;
};

std::vector<CyclePair> engine_instances() {
  std::mt19937 rng(4242);
  std::vector<CyclePair> out;
  for (int i = 0; i < 10; ++i)
    out.push_back({tropical_hypersurface(random_polytope(rng, 2, 4)), tropical_hypersurface(random_polytope(rng, 2, 4))});
  for (int i = 0; i < 8; ++i)
    out.push_back({tropical_hypersurface(random_polytope(rng, 3, 5, 2)),
                   tropical_hypersurface(random_polytope(rng, 3, 5, 2))});
  // Links of hypersurfaces at points of their cells.
  for (int i = 0; i < 7; ++i) {
    const auto x = tropical_hypersurface(random_polytope(rng, 3, 5, 2));
    const auto& faces = x.cells()[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(x.size()) - 1))].face_lattice();
    const auto& level = faces[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(faces.size()) - 1))];
    const auto& f = level[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(level.size()) - 1))];
    out.push_back({link_cycle(x, f.relative_interior_point()), tropical_hypersurface(random_polytope(rng, 3, 5, 2))});
  }
  // Curves against surfaces in R^3.
  for (int i = 0; i < 7; ++i) {
    const auto p = random_polytope(rng, 3, 4, 2);
    const auto curve = stable_intersection(tropical_hypersurface(p), tropical_hypersurface(random_polytope(rng, 3, 4, 2)));
    out.push_back({curve, tropical_hypersurface(random_polytope(rng, 3, 5, 2))});
  }
  // Weighted with mixed signs.
  for (int i = 0; i < 3; ++i) {
    const auto a = tropical_hypersurface(random_polytope(rng, 2, 4));
    const auto b = tropical_hypersurface(random_polytope(rng, 2, 4));
    out.push_back({cycle_sum(a, b.scaled(-2)), tropical_hypersurface(random_polytope(rng, 2, 4))});
  }
  return out;
}

void engine_cross_validation(Outcome& o) {
  const auto cases = engine_instances();
  int count = 0, nonzero = 0;
  for (const auto& [x, y] : cases) {
    const auto main = stable_intersection(x, y);
    const auto pert = perturbation_oracle(x, y, oracle_generic_vector(x, y), 1).limit;
    const auto diag = diagonal_intersection(x, y);
    o.require(cycles_equal(main, pert), "perturbation limit differs on case " + std::to_string(count));
    o.require(cycles_equal(main, diag), "diagonal computation differs on case " + std::to_string(count));
    nonzero += main.is_zero() ? 0 : 1;
    ++count;
  }
  o.detail << count << " pairs (" << nonzero << " with nonzero product), three engines agree";
}

void structural(Outcome& o) {
  std::mt19937 rng(99);
  int checked = 0;
  // Commutativity, dimension, balancing.
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = i < 10 ? 2 : 3;
    const auto x = tropical_hypersurface(random_polytope(rng, d, 4, 2));
    auto y = tropical_hypersurface(random_polytope(rng, d, 4, 2));
    if (d == 3 && i % 2 == 0) y = stable_intersection(y, tropical_hypersurface(random_polytope(rng, d, 4, 2)));
    const auto xy = stable_intersection(x, y);
    const auto yx = stable_intersection(y, x);
    o.require(shape_ok(x, y, xy), "dimension or balancing fails");
    o.require(cycles_equal(xy, yx), "commutativity fails");
    ++checked;
  }
  // Associativity.
  int triples = 0;
  for (int i = 0; i < 22; ++i) {
    const std::size_t d = i < 4 ? 2 : 3;
    auto x = tropical_hypersurface(random_polytope(rng, d, 4, 2));
    auto y = tropical_hypersurface(random_polytope(rng, d, 4, 2));
    auto z = d == 2 ? TropicalCycle::ambient(2, uniform(rng, 1, 3)) : tropical_hypersurface(random_polytope(rng, d, 4, 2));
    const auto left = stable_intersection(stable_intersection(x, y), z);
    const auto right = stable_intersection(x, stable_intersection(y, z));
    o.require(cycles_equal(left, right), "associativity fails on triple " + std::to_string(i));
    o.require(shape_ok(stable_intersection(x, y), z, left), "dimension or balancing fails on a triple product");
    ++triples;
  }
  // Distributivity over cycle_sum.
  int dist = 0;
  for (int i = 0; i < 10; ++i) {
    const std::size_t d = i < 5 ? 2 : 3;
    const auto x = tropical_hypersurface(random_polytope(rng, d, 4, 2));
    const auto y = tropical_hypersurface(random_polytope(rng, d, 4, 2));
    const auto z = tropical_hypersurface(random_polytope(rng, d, 4, 2));
    const auto left = stable_intersection(x, cycle_sum(y, z));
    const auto right = cycle_sum(stable_intersection(x, y), stable_intersection(x, z));
    o.require(cycles_equal(left, right), "distributivity fails");
    ++dist;
  }
  // Links.
  int links = 0;
  for (int i = 0; i < 8; ++i) {
    const auto x = tropical_hypersurface(random_polytope(rng, 3, 5, 2));
    const auto y = tropical_hypersurface(random_polytope(rng, 3, 5, 2));
    const auto xy = stable_intersection(x, y);
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < y.size(); b += 2) {
        const auto meet = intersect(x.cells()[a], y.cells()[b]);
        if (meet.is_empty()) continue;
        const auto w = meet.relative_interior_point();
        const auto left = xy.support_contains(w) ? link_cycle(xy, w) : TropicalCycle::zero(3, xy.dim());
        const auto right = stable_intersection(link_cycle(x, w), link_cycle(y, w));
        o.require(cycles_equal(left, right), "link compatibility fails");
        ++links;
      }
  }
  // Quotients: hypersurfaces of polytopes in the plane x1 + x2 + x3 = 0 contain (1,1,1).
  int quotients = 0;
  const LatticeSubgroup diag(3, {IntVector{1, 1, 1}});
  for (int i = 0; i < 8; ++i) {
    auto planar = [&] {
      for (;;) {
        std::vector<RatVector> pts;
        for (int k = 0; k < 4; ++k) {
          const long a = uniform(rng, -2, 2), b = uniform(rng, -2, 2);
          pts.push_back(rv({a, b, -a - b}));
        }
        RationalPolytope p(3, pts);
        if (p.dim() == 2) return p;
      }
    };
    const auto x = tropical_hypersurface(planar());
    const auto y = tropical_hypersurface(planar());
    const auto left = quotient_by_lineality(stable_intersection(x, y), diag);
    const auto right = stable_intersection(quotient_by_lineality(x, diag), quotient_by_lineality(y, diag));
    o.require(cycles_equal(left, right), "quotient compatibility fails");
    ++quotients;
  }
  o.detail << checked << " commuting pairs, " << triples << " associativity triples, " << dist << " distributivity, "
           << links << " link checks, " << quotients << " quotient checks";
}

void index_identity(Outcome& o) {
  auto idx = [](const LatticeSubgroup& s) { return lattice_index(LatticeSubgroup::full(s.ambient_rank()), s); };
  {
    const LatticeSubgroup a(2, {{2, 0}, {0, 1}}), b(2, {{1, 0}, {0, 2}}), c(2, {{1, 1}, {1, -1}});
    const Integer l1 = idx(sum_lattices(a, c)).value() * idx(sum_lattices(b, intersect_lattices(a, c))).value();
    const Integer l2 = idx(sum_lattices(a, b)).value() * idx(sum_lattices(intersect_lattices(a, b), c)).value();
    o.require(l1 == 2 && l2 == 2, "worked Z^2 instance is not 2 = 2");
  }
  std::mt19937 rng(31337);
  int count = 0, attempts = 0;
  while (count < 120 && attempts < 2000) {
    ++attempts;
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    auto sub = [&] {
      const std::size_t rank = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n)));
      std::vector<IntVector> g;
      for (std::size_t i = 0; i < rank + static_cast<std::size_t>(uniform(rng, 0, 1)); ++i)
        g.push_back(random_int_vector(rng, n, -4, 4));
      return LatticeSubgroup(n, g);
    };
    const auto a = sub(), b = sub(), c = sub();
    const auto i1 = idx(sum_lattices(a, c)), i2 = idx(sum_lattices(b, intersect_lattices(a, c)));
    const auto i3 = idx(sum_lattices(a, b)), i4 = idx(sum_lattices(intersect_lattices(a, b), c));
    if (!i1.is_finite() || !i2.is_finite() || !i3.is_finite() || !i4.is_finite()) continue;
    o.require(i1.value() * i2.value() == i3.value() * i4.value(), "index identity fails in Z^" + std::to_string(n));
    ++count;
  }
  o.detail << "worked instance 2 = 2, " << count << " random triples with finite indices";
}

RationalPolytope random_simple_polytope(std::mt19937& rng, std::size_t d) {
  for (;;) {
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < d; ++i) {
      IntVector e(d, Integer(0));
      e[i] = 1;
      hs.push_back({e, 3});
      hs.push_back({negated(e), 3});
    }
    for (int k = 0; k < 3; ++k) {
      auto a = random_int_vector(rng, d, -2, 2);
      if (tropical::is_zero(a)) continue;
      Integer s = 0;
      for (const auto& x : a) s += abs(x);
      hs.push_back({a, s * 2 + uniform(rng, -1, 1)});
    }
    RationalPolytope p(Polyhedron::from_h(d, hs));
    try {
      (void)ReferenceFan::of_simple_polytope(p);
      return p;
    } catch (const ValidationError&) {
    }
  }
}

void polytope_algebra(Outcome& o) {
  std::mt19937 rng(2718);
  int homs = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = i < 16 ? 2 : 3;
    const auto p = random_polytope(rng, d, 4, 2);
    const auto q = random_positive_dim_polytope(rng, d, 3, 2);
    o.require(elements_equal(product(phi(p), phi(q)), phi(minkowski_sum(p, q))), "phi is not multiplicative");
    ++homs;
  }
  int nil = 0;
  for (int i = 0; i < 6; ++i) {
    const std::size_t d = i < 4 ? 2 : 3;
    const auto p = random_polytope(rng, d, 5, 2);
    const auto x = sub(phi(p), AlgebraElement::identity(d));
    o.require(power(x, static_cast<unsigned>(d + 1)).is_zero(), "(phi(P) - 1)^(n+1) is not zero");
    const auto l = log_element(phi(p));
    o.require(cycles_equal(l.grade(1), tropical_hypersurface(p)), "grade 1 of log(phi(P)) is not T(P)");
    for (std::size_t k = 0; k <= d; ++k)
      if (k != 1) o.require(l.grade(k).is_zero(), "log(phi(P)) has a stray grade");
    o.require(elements_equal(exp_element(l), phi(p)), "exp(log(phi(P))) != phi(P)");
    ++nil;
  }
  int splits = 0;
  while (splits < 10) {
    const std::size_t d = splits < 7 ? 2 : 3;
    const auto p = random_polytope(rng, d, 6, 3);
    auto a = random_int_vector(rng, d, -2, 2);
    if (tropical::is_zero(a)) continue;
    const auto c = p.polyhedron().relative_interior_point();
    const Rational b = dot(a, c);
    const auto lo = Polyhedron::from_h(d, {make_halfspace(to_rational(a), b)});
    const auto hi = Polyhedron::from_h(d, {make_halfspace(to_rational(negated(a)), -b)});
    const RationalPolytope p1(intersect(p.polyhedron(), lo)), p2(intersect(p.polyhedron(), hi));
    for (unsigned k = 1; k <= d; ++k) o.require(valuation_check(p1, p2, k).holds(), "valuation identity fails");
    const auto u = convex_union(p1, p2);
    o.require(elements_equal(add(phi(u), phi(intersect(p1, p2))), add(phi(p1), phi(p2))),
              "valuation relation fails in the algebra");
    ++splits;
  }
  int fans = 0, decomps = 0;
  std::vector<RationalPolytope> refs{RationalPolytope::cube(2)};
  for (int i = 0; i < 3; ++i) refs.push_back(random_polytope(rng, 2, 6, 4));
  for (int i = 0; i < 3; ++i) refs.push_back(random_simple_polytope(rng, 3));
  for (const auto& ref : refs) {
    const std::size_t d = ref.ambient_dim();
    const auto basis = build_hypersurface_basis(ReferenceFan::of_simple_polytope(ref));
    std::vector<TropicalCycle> targets{tropical_hypersurface(ref), tropical_hypersurface(ref.dilated(2)),
                                        TropicalCycle::from_proper_cells(d, {Polyhedron::point(RatVector(d))}, {1})};
    targets.push_back(stable_power(tropical_hypersurface(ref), 2));
    if (basis.cycles.size() >= 2)
      targets.push_back(cycle_sum(stable_intersection(basis.cycles[0], basis.cycles[1]).scaled(3),
                                  stable_power(basis.cycles[1], 2).scaled(Rational(-1, 2))));
    for (const auto& t : targets) {
      if (t.is_zero()) continue;
      const auto dec = decompose_into_powers(t, basis);
      o.require(cycles_equal(recombine(dec, basis), t), "decomposition does not round-trip");
      ++decomps;
    }
    ++fans;
  }
  o.detail << homs << " homomorphism pairs, " << nil << " nilpotency/log/exp checks, " << splits
           << " valuation splits, " << decomps << " decompositions on " << fans << " fans (square + " << fans - 1
           << " random)";
}

void pushforwards(Outcome& o) {
  std::mt19937 rng(161803);
  int count = 0, full = 0, attempts = 0;
  while (count < 32 && attempts < 400) {
    ++attempts;
    const int kind = count % 4;
    TropicalCycle x;
    std::size_t m = 0;
    if (kind == 0) {
      x = tropical_hypersurface(random_polytope(rng, 2, 4));
      m = static_cast<std::size_t>(uniform(rng, 1, 2));
    } else if (kind == 1) {
      x = tropical_hypersurface(random_polytope(rng, 3, 4, 2));
      m = 2;
    } else if (kind == 2) {
      x = stable_intersection(tropical_hypersurface(random_polytope(rng, 3, 4, 2)),
                              tropical_hypersurface(random_polytope(rng, 3, 4, 2)));
      m = static_cast<std::size_t>(uniform(rng, 1, 2));
    } else {
      x = tropical_hypersurface(random_polytope(rng, 3, 4, 2));
      m = 3;
    }
    if (x.is_zero()) continue;
    IntMatrix a(m, x.ambient_dim());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < x.ambient_dim(); ++j) a(i, j) = uniform(rng, -2, 2);
    TropicalCycle img;
    try {
      img = pushforward(a, x);
    } catch (const PreconditionError&) {
      continue;
    }
    o.require(is_balanced(img).balanced, "pushforward is not balanced");
    if (!img.is_zero() && img.dim() == static_cast<int>(m)) {
      std::vector<Rational> seen;
      int samples = 0;
      while (samples < 5) {
        const auto pt = random_point(rng, m, -97, 97);
        const auto mult = img.multiplicity_at(pt);
        if (mult == 0 && !img.support_contains(pt)) {
          o.require(false, "full-dimensional image does not cover the target");
          break;
        }
        if (mult == 0) continue;  // landed on a lower-dimensional cell
        seen.push_back(mult);
        ++samples;
      }
      for (const auto& s : seen) o.require(s == seen.front(), "multiplicity is not constant on a full image");
      ++full;
    }
    ++count;
  }
  o.detail << count << " (map, cycle) instances, " << full << " with full-dimensional image";
}

void projections(Outcome& o) {
  std::mt19937 rng(5772);
  int count = 0;
  for (std::size_t d : {2u, 3u, 4u})
    for (int i = 0; i < (d == 4 ? 5 : 6); ++i) {
      const auto p = random_polytope(rng, d, d == 4 ? 5 : 5, 2);
      std::vector<IntVector> basis;
      for (std::size_t j = 0; j < d; ++j)
        if (uniform(rng, 0, 1) == 1 || (basis.empty() && j + 1 == d)) {
          IntVector e(d, Integer(0));
          e[j] = 1;
          basis.push_back(e);
        }
      const LatticeSubgroup l(d, basis);
      const auto left = tropical_hypersurface(projected_polytope(p, l));
      const auto right = project_hypersurface(p, l);
      o.require(cycles_equal(left, right), "projection theorem fails in R^" + std::to_string(d));
      ++count;
    }
  o.detail << count << " instances in R^2..R^4";
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "R^5 connectivity counterexample (example-6-2)", example_62},
      {2, "volume theorem vs triangulation oracle", volume_theorem},
      {3, "mixed volumes vs inclusion-exclusion oracle", mixed_volumes},
      {4, "engine cross-validation (definition, perturbation, diagonal)", engine_cross_validation},
      {5, "structural properties of stable intersection", structural},
      {6, "lattice index identity", index_identity},
      {7, "polytope algebra", polytope_algebra},
      {8, "pushforward balancing and constant multiplicity", pushforwards},
      {9, "projection theorem", projections},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_ok = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%d] %s: %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.str().c_str(), secs);
    std::fflush(stdout);
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
