// The oracles are only useful if they are right on hand-checked inputs.
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using oracle::Point;
using oracle::Q;

namespace {

Point p(std::initializer_list<long> xs) {
  Point r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

}  // namespace

TEST(VolumeOracle, SmallPolygons) {
  EXPECT_EQ(oracle::normalized_volume({p({0, 0}), p({1, 0}), p({0, 1})}), 1);
  EXPECT_EQ(oracle::normalized_volume({p({0, 0}), p({1, 0}), p({0, 1}), p({1, 1})}), 2);
  // Interior and edge points must not change the answer.
  EXPECT_EQ(oracle::normalized_volume({p({0, 0}), p({2, 0}), p({0, 2}), p({1, 0}), p({1, 1}), p({0, 1})}), 4);
  EXPECT_EQ(oracle::normalized_volume({p({0, 0}), p({3, 0}), p({0, 3}), p({1, 1})}), 9);
}

TEST(VolumeOracle, SmallPolytopes) {
  EXPECT_EQ(oracle::normalized_volume({p({0, 0, 0}), p({1, 0, 0}), p({0, 1, 0}), p({0, 0, 1})}), 1);
  std::vector<Point> cube;
  for (long a : {0, 1})
    for (long b : {0, 1})
      for (long c : {0, 1}) cube.push_back(p({a, b, c}));
  EXPECT_EQ(oracle::normalized_volume(cube), 6);
  cube.push_back(p({0, 0, 0}));
  EXPECT_EQ(oracle::normalized_volume(cube), 6);
  // Octahedron with vertices ±e_i: Euclidean volume 4/3.
  EXPECT_EQ(oracle::normalized_volume({p({1, 0, 0}), p({-1, 0, 0}), p({0, 1, 0}), p({0, -1, 0}), p({0, 0, 1}),
                                       p({0, 0, -1})}),
            8);
}

TEST(VolumeOracle, LowerDimensionalSetsHaveZeroVolume) {
  EXPECT_EQ(oracle::normalized_volume({p({0, 0}), p({1, 1}), p({2, 2})}), 0);
  EXPECT_EQ(oracle::normalized_volume({p({0, 0, 0}), p({1, 0, 0}), p({0, 1, 0}), p({1, 1, 0})}), 0);
}

TEST(MixedVolumeOracle, KnownValues) {
  const std::vector<Point> tri{p({0, 0}), p({1, 0}), p({0, 1})};
  const std::vector<Point> tri2{p({0, 0}), p({2, 0}), p({0, 2})};
  EXPECT_EQ(oracle::mixed_volume({tri, tri}), 1);
  EXPECT_EQ(oracle::mixed_volume({tri2, tri2}), 4);
  EXPECT_EQ(oracle::mixed_volume({{p({0, 0}), p({1, 0})}, {p({0, 0}), p({0, 1})}}), 1);
  EXPECT_EQ(oracle::mixed_volume({{p({0, 0}), p({1, 0})}, {p({0, 0}), p({2, 0})}}), 0);
}
