#include "support/fixtures.hpp"
#include "support/random.hpp"

#include "tropical/complex.hpp"
#include "tropical/error.hpp"
#include "tropical/polyhedron.hpp"

#include <gtest/gtest.h>

using namespace tropical;
using testing_support::iv;
using testing_support::ray;
using testing_support::rv;

namespace {

Polyhedron quadrant() { return Polyhedron::cone(2, {iv({1, 0}), iv({0, 1})}); }
Polyhedron triangle() { return Polyhedron::from_v(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})}); }
Polyhedron square() { return Polyhedron::from_v(2, {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})}); }

std::vector<std::size_t> face_counts(const Polyhedron& p) {
  std::vector<std::size_t> out;
  for (const auto& level : p.face_lattice()) out.push_back(level.size());
  return out;
}

}  // namespace

TEST(DualConvert, QuadrantFromInequalities) {
  const auto p = Polyhedron::from_h(2, {{iv({-1, 0}), 0}, {iv({0, -1}), 0}});
  EXPECT_TRUE(p.vertices().size() == 1 && is_zero(p.vertices()[0]));
  EXPECT_EQ(p.rays(), (std::vector<IntVector>{iv({0, 1}), iv({1, 0})}));
  EXPECT_EQ(p, quadrant());
}

TEST(DualConvert, TriangleFromVertices) {
  EXPECT_EQ(triangle().inequalities().size(), 3u);
  EXPECT_TRUE(triangle().equations().empty());
}

TEST(DualConvert, DegenerateSegmentIsAPoint) {
  const auto p = Polyhedron::from_h(1, {{iv({1}), 0}, {iv({-1}), 0}});
  EXPECT_EQ(p.dim(), 0);
  EXPECT_EQ(p, Polyhedron::point(rv({0})));
}

TEST(DualConvert, InvolutiveOnRandomPolytopes) {
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto p = testing_support::random_positive_dim_polytope(rng, 3, 6).polyhedron();
    const auto h = Polyhedron::from_h(3, p.inequalities(), p.equations());
    EXPECT_EQ(h, p);
    EXPECT_TRUE(h.contains(p) && p.contains(h));
    EXPECT_EQ(dual_convert(p), p);
    auto v = to_v(to_h(p.v_rep()));
    EXPECT_EQ(Polyhedron::from_v(3, v.vertices, v.rays, v.lineality), p);
  }
}

TEST(DualConvert, RedundantDataIsRemoved) {
  const auto p = Polyhedron::from_v(2, {rv({0, 0}), rv({2, 0}), rv({0, 2}), rv({1, 1}), rv({1, 0})});
  EXPECT_EQ(p.vertices().size(), 3u);
  const auto q = Polyhedron::from_h(2, {{iv({1, 0}), 1}, {iv({1, 0}), 2}, {iv({-1, 0}), 0}, {iv({0, 1}), 1},
                                        {iv({0, -1}), 0}});
  EXPECT_EQ(q.inequalities().size(), 4u);
}

TEST(Intersect, Examples) {
  const auto tri = triangle();
  EXPECT_EQ(intersect(tri, Polyhedron::whole(2)), tri);
  EXPECT_EQ(intersect(Polyhedron::linear_space(2, {iv({1, 0})}), Polyhedron::linear_space(2, {iv({0, 1})})),
            Polyhedron::point(rv({0, 0})));
  EXPECT_TRUE(intersect(ray(iv({1, 1})), Polyhedron::from_h(2, {{iv({1, 0}), -1}})).is_empty());
}

TEST(MinkowskiSum, Examples) {
  const auto tri = triangle();
  EXPECT_EQ(minkowski_sum(tri, Polyhedron::point(rv({0, 0}))), tri);
  const auto e1 = Polyhedron::from_v(2, {rv({0, 0}), rv({1, 0})});
  const auto e2 = Polyhedron::from_v(2, {rv({0, 0}), rv({0, 1})});
  EXPECT_EQ(minkowski_sum(e1, e2), square());
  EXPECT_EQ(minkowski_sum(ray(iv({1, 0})), ray(iv({-1, 0}))), Polyhedron::linear_space(2, {iv({1, 0})}));
}

TEST(LinkAt, Examples) {
  EXPECT_EQ(quadrant().link_at(rv({0, 0})), quadrant());
  const auto seg = Polyhedron::from_v(2, {rv({0, 0}), rv({1, 0})});
  EXPECT_EQ(seg.link_at(RatVector{Rational(1, 2), 0}), Polyhedron::linear_space(2, {iv({1, 0})}));
  EXPECT_EQ(triangle().link_at(rv({0, 0})), quadrant());
  EXPECT_THROW(triangle().link_at(rv({5, 5})), PreconditionError);
}

TEST(CommonRefinement, Examples) {
  const PolyhedralComplex x(2, {ray(iv({1, 0})), ray(iv({0, 1})), ray(iv({-1, -1}))});
  const PolyhedralComplex whole(2, {Polyhedron::whole(2)});
  EXPECT_EQ(common_refinement(x, whole).cells().size(), 3u);
  const PolyhedralComplex xa(2, {Polyhedron::linear_space(2, {iv({1, 0})})});
  const PolyhedralComplex ya(2, {Polyhedron::linear_space(2, {iv({0, 1})})});
  const auto m = common_refinement(xa, ya);
  ASSERT_EQ(m.cells().size(), 1u);
  EXPECT_EQ(m.cells()[0], Polyhedron::point(rv({0, 0})));
}

TEST(UnionRefinement, LineAndReflection) {
  // Tropical line and its reflection share no ray, so the union has 6 rays.
  const PolyhedralComplex a(2, {ray(iv({-1, 0})), ray(iv({0, -1})), ray(iv({1, 1}))});
  const PolyhedralComplex b(2, {ray(iv({1, 0})), ray(iv({0, 1})), ray(iv({-1, -1}))});
  const auto u = union_refinement(a, b);
  EXPECT_EQ(u.cells().size(), 6u);
  EXPECT_TRUE(u.is_proper());
  // The pairwise meet keeps only the common apex.
  const auto m = common_refinement(a, b);
  ASSERT_EQ(m.cells().size(), 1u);
  EXPECT_EQ(m.cells()[0].dim(), 0);
}

TEST(Refined, OverlappingSegmentsBecomeProper) {
  const PolyhedralComplex x(1, {Polyhedron::from_v(1, {rv({0}), rv({2})}), Polyhedron::from_v(1, {rv({1}), rv({3})})});
  EXPECT_FALSE(x.is_proper());
  const auto r = refined(x);
  EXPECT_TRUE(r.is_proper());
  EXPECT_EQ(r.cells().size(), 3u);
}

TEST(MembershipInSum, Examples) {
  const auto tri = triangle();
  EXPECT_TRUE(membership_in_sum(tri, tri, rv({0, 0})));
  EXPECT_TRUE(membership_in_sum(ray(iv({1, 0})), ray(iv({0, 1})), rv({1, -1})));
  EXPECT_FALSE(membership_in_sum(ray(iv({1, 0})), ray(iv({0, 1})), rv({-1, 0})));
}

TEST(FaceLattice, Counts) {
  EXPECT_EQ(face_counts(Polyhedron::from_v(2, {rv({0, 0}), rv({1, 0})})), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(face_counts(square()), (std::vector<std::size_t>{4, 4, 1}));
  EXPECT_EQ(face_counts(quadrant()), (std::vector<std::size_t>{1, 2, 1}));
  // Lineality makes the minimal face a line.
  const auto halfplane = Polyhedron::cone(2, {iv({0, 1})}, {iv({1, 0})});
  EXPECT_EQ(face_counts(halfplane), (std::vector<std::size_t>{1, 1}));
}

TEST(FaceLattice, EulerRelationOnRandomPolytopes) {
  std::mt19937 rng(17);
  for (int i = 0; i < 10; ++i) {
    const auto p = testing_support::random_polytope(rng, 3, 7).polyhedron();
    const auto c = face_counts(p);
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(static_cast<long>(c[0]) - static_cast<long>(c[1]) + static_cast<long>(c[2]), 2);
    for (const auto& f : p.facets()) EXPECT_TRUE(is_face(f, p));
  }
}

TEST(Polyhedron, RelativeInteriorAndMinimalFace) {
  const auto sq = square();
  const auto x = sq.relative_interior_point();
  EXPECT_TRUE(sq.in_relative_interior(x));
  EXPECT_FALSE(sq.in_relative_interior(rv({0, 0})));
  EXPECT_EQ(sq.minimal_face(RatVector{Rational(1, 2), 0}).dim(), 1);
  EXPECT_EQ(sq.minimal_face(rv({1, 1})), Polyhedron::point(rv({1, 1})));
}

TEST(Polyhedron, CanonicalRationalCoordinates) {
  // Vertices computed from inequalities come out in lowest terms.
  const auto p = Polyhedron::from_h(1, {{iv({2}), 1}, {iv({-1}), 0}});
  ASSERT_EQ(p.vertices().size(), 2u);
  for (const auto& v : p.vertices()) EXPECT_EQ(format_rational(v[0]), v[0] == 0 ? "0" : "1/2");
  EXPECT_EQ(p, Polyhedron::from_v(1, {rv({0}), RatVector{Rational(1, 2)}}));
}

TEST(Polyhedron, ImagesAndProducts) {
  const auto sq = square();
  const auto img = sq.image(IntMatrix::from_rows({iv({1, 1})}, 2));
  EXPECT_EQ(img, Polyhedron::from_v(1, {rv({0}), rv({2})}));
  const auto prod = cartesian_product(triangle(), Polyhedron::from_v(1, {rv({0}), rv({1})}));
  EXPECT_EQ(prod.dim(), 3);
  EXPECT_EQ(prod.vertices().size(), 6u);
  EXPECT_EQ(negated(ray(iv({1, 2}))), ray(iv({-1, -2})));
  EXPECT_EQ(sq.recession_cone(), Polyhedron::point(rv({0, 0})));
}

TEST(Polyhedron, DimensionChecks) {
  EXPECT_THROW(intersect(Polyhedron::whole(2), Polyhedron::whole(3)), DimensionMismatch);
  EXPECT_THROW(Polyhedron::from_v(2, {rv({1, 2, 3})}), DimensionMismatch);
}
