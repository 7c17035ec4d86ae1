#include "support/fixtures.hpp"

#include "tropical/connectivity.hpp"
#include "tropical/error.hpp"

#include <gtest/gtest.h>

using namespace tropical;
using namespace testing_support;

TEST(Connectivity, TropicalLine) {
  const auto r = is_connected_codim1(tropical_line());
  EXPECT_TRUE(r.connected);
  EXPECT_EQ(r.components.size(), 1u);
}

TEST(Connectivity, ParallelLines) {
  const PolyhedralComplex x(2, {Polyhedron::from_v(2, {rv({0, 0})}, {}, {iv({1, 0})}),
                                Polyhedron::from_v(2, {rv({0, 1})}, {}, {iv({1, 0})})});
  const auto r = is_connected_codim1(x);
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.components.size(), 2u);
}

TEST(Connectivity, TwoPlanesThroughALineAreConnected) {
  const PolyhedralComplex x(3, {Polyhedron::linear_space(3, {iv({1, 0, 0}), iv({0, 1, 0})}),
                                Polyhedron::linear_space(3, {iv({1, 0, 0}), iv({0, 0, 1})})});
  EXPECT_TRUE(is_connected_codim1(x).connected);
}

TEST(Connectivity, PlanesMeetingInAPointAreNot) {
  // Two 2-planes in R^4 meeting only at the origin.
  const PolyhedralComplex x(4, {Polyhedron::linear_space(4, {iv({1, 0, 0, 0}), iv({0, 1, 0, 0})}),
                                Polyhedron::linear_space(4, {iv({0, 0, 1, 0}), iv({0, 0, 0, 1})})});
  const auto r = is_connected_codim1(x);
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.components.size(), 2u);
}

TEST(Connectivity, RejectsImpureComplexes) {
  const PolyhedralComplex x(2, {Polyhedron::whole(2), Polyhedron::point(rv({5, 5}))});
  EXPECT_THROW(is_connected_codim1(x), ValidationError);
}

TEST(UnionSupport, MergesParts) {
  const PolyhedralComplex a(2, {ray(iv({1, 0}))});
  const PolyhedralComplex b(2, {ray(iv({0, 1}))});
  const auto u = union_support({a, b});
  EXPECT_EQ(u.cells().size(), 2u);
  EXPECT_TRUE(is_connected_codim1(u).connected);
}
