#include "support/fixtures.hpp"

#include "tropical/error.hpp"
#include "tropical/polytope_algebra.hpp"
#include "tropical/stable_intersection.hpp"

#include <gtest/gtest.h>

using namespace tropical;
using namespace testing_support;

namespace {

RationalPolytope seg(const RatVector& a, const RatVector& b) { return RationalPolytope::segment(a, b); }

}  // namespace

TEST(Phi, PointIsIdentity) {
  EXPECT_TRUE(elements_equal(phi(RationalPolytope(2, {rv({3, 1})})), AlgebraElement::identity(2)));
}

TEST(Phi, StandardTriangle) {
  const auto a = phi(RationalPolytope::simplex(2));
  EXPECT_TRUE(cycles_equal(a.grade(0), TropicalCycle::ambient(2)));
  EXPECT_TRUE(cycles_equal(a.grade(1), tropical_line()));
  EXPECT_TRUE(cycles_equal(a.grade(2), origin_point(2, Rational(1, 2))));
}

TEST(Phi, SegmentInLine) {
  const auto a = phi(seg(rv({0}), rv({3})));
  EXPECT_TRUE(cycles_equal(a.grade(1), origin_point(1, 3)));
}

TEST(Product, Examples) {
  const auto a = phi(RationalPolytope::simplex(2));
  EXPECT_TRUE(elements_equal(product(a, AlgebraElement::identity(2)), a));
  const auto sq = product(phi(seg(rv({0, 0}), rv({1, 0}))), phi(seg(rv({0, 0}), rv({0, 1}))));
  EXPECT_TRUE(elements_equal(sq, phi(RationalPolytope::cube(2))));
  EXPECT_TRUE(elements_equal(product(a, a), phi(RationalPolytope::simplex(2, 2))));
  EXPECT_THROW(product(a, AlgebraElement::identity(3)), DimensionMismatch);
}

TEST(Algebra, LinearStructure) {
  const auto a = phi(RationalPolytope::simplex(2));
  EXPECT_TRUE(sub(a, a).is_zero());
  EXPECT_TRUE(elements_equal(add(a, a), scale(a, 2)));
  EXPECT_TRUE(elements_equal(power(a, 3), product(a, product(a, a))));
  EXPECT_TRUE(elements_equal(power(a, 0), AlgebraElement::identity(2)));
}

TEST(LogExp, Examples) {
  EXPECT_TRUE(log_element(AlgebraElement::identity(2)).is_zero());
  const auto p = RationalPolytope::simplex(2);
  const auto l = log_element(phi(p));
  EXPECT_TRUE(l.grade(0).is_zero());
  EXPECT_TRUE(cycles_equal(l.grade(1), tropical_hypersurface(p)));
  EXPECT_TRUE(l.grade(2).is_zero());
  EXPECT_TRUE(elements_equal(exp_element(l), phi(p)));
  EXPECT_THROW(log_element(AlgebraElement::zero(2)), PreconditionError);
}

TEST(Nilpotency, AugmentationIdeal) {
  const auto x = sub(phi(RationalPolytope::cube(3)), AlgebraElement::identity(3));
  EXPECT_FALSE(power(x, 3).is_zero());
  EXPECT_TRUE(power(x, 4).is_zero());
}

TEST(ReferenceFan, FromSimplePolytopes) {
  const auto f = ReferenceFan::of_simple_polytope(RationalPolytope::simplex(2));
  EXPECT_EQ(f.rays.size(), 3u);
  EXPECT_EQ(f.cones.size(), 3u);
  EXPECT_NO_THROW(f.validate());
  EXPECT_EQ(f.cones_of_codim(1).size(), 3u);
  EXPECT_THROW(ReferenceFan::of_simple_polytope(
                   RationalPolytope(3, {rv({1, 0, 0}), rv({-1, 0, 0}), rv({0, 1, 0}), rv({0, -1, 0}), rv({0, 0, 1}),
                                        rv({0, 0, -1})})),
               ValidationError);
}

TEST(ReferenceFan, ValidateRejectsIncompleteFans) {
  ReferenceFan f;
  f.ambient_dim = 2;
  f.rays = {iv({1, 0}), iv({0, 1}), iv({-1, -1})};
  f.cones = {{0, 1}, {1, 2}};
  EXPECT_THROW(f.validate(), ValidationError);
}

TEST(HypersurfaceBasis, TriangleFan) {
  const auto b = build_hypersurface_basis(ReferenceFan::of_simple_polytope(RationalPolytope::simplex(2)));
  ASSERT_EQ(b.cycles.size(), 1u);
  EXPECT_TRUE(cycles_equal(b.cycles[0], tropical_line()));
  for (const auto& w : b.weights[0]) EXPECT_EQ(w, 1);
}

TEST(HypersurfaceBasis, SquareFan) {
  const auto b = build_hypersurface_basis(ReferenceFan::of_simple_polytope(RationalPolytope::cube(2)));
  ASSERT_EQ(b.cycles.size(), 2u);
  const auto e1 = tropical_hypersurface(seg(rv({0, 0}), rv({1, 0})));
  const auto e2 = tropical_hypersurface(seg(rv({0, 0}), rv({0, 1})));
  EXPECT_TRUE((cycles_equal(b.cycles[0], e1) && cycles_equal(b.cycles[1], e2)) ||
              (cycles_equal(b.cycles[0], e2) && cycles_equal(b.cycles[1], e1)));
  for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(cycles_equal(tropical_hypersurface(b.polytopes[i]), b.cycles[i]));
}

TEST(HypersurfaceBasis, PointFan) {
  ReferenceFan f;
  f.ambient_dim = 0;
  f.cones = {{}};
  EXPECT_TRUE(build_hypersurface_basis(f).cycles.empty());
}

TEST(Decompose, Examples) {
  const auto tri_basis = build_hypersurface_basis(ReferenceFan::of_simple_polytope(RationalPolytope::simplex(2)));
  const auto d1 = decompose_into_powers(tropical_line(), tri_basis);
  ASSERT_EQ(d1.coefficients.size(), 1u);
  EXPECT_EQ(d1.coefficients[0], 1);
  const auto d2 = decompose_into_powers(tropical_line(2), tri_basis);
  EXPECT_EQ(d2.coefficients[0], 2);

  const auto sq_basis = build_hypersurface_basis(ReferenceFan::of_simple_polytope(RationalPolytope::cube(2)));
  const auto dp = decompose_into_powers(origin_point(2), sq_basis);
  EXPECT_TRUE(cycles_equal(recombine(dp, sq_basis), origin_point(2)));
  Rational mixed = 0;
  for (std::size_t i = 0; i < dp.terms.size(); ++i)
    if (dp.terms[i] == std::vector<std::size_t>{0, 1}) mixed = dp.coefficients[i];
  EXPECT_EQ(mixed, 1);
}

TEST(Decompose, RejectsCyclesOutsideTheFan) {
  const auto basis = build_hypersurface_basis(ReferenceFan::of_simple_polytope(RationalPolytope::cube(2)));
  EXPECT_THROW(decompose_into_powers(tropical_line(), basis), ValidationError);
  EXPECT_THROW(decompose_into_powers(TropicalCycle::ambient(3), basis), DimensionMismatch);
}
