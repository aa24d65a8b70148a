#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "curveturn/geom.hpp"
#include "error_matchers.hpp"

using namespace curveturn;

TEST(Geom, NonFiniteCoordinatesRejected) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_ERROR_KIND(Point2(inf, 0.0), ErrorKind::NonFinite);
  EXPECT_ERROR_KIND(Vector2(0.0, std::nan("")), ErrorKind::NonFinite);
}

TEST(Geom, AngleBetween) {
  EXPECT_NEAR(angle_between({1, 0}, {0, 1}), kPi / 2, 1e-15);
  EXPECT_NEAR(angle_between({1, 0}, {-1, 0}), kPi, 1e-15);
  EXPECT_NEAR(angle_between({1, 1}, {2, 2}), 0.0, 1e-15);
  EXPECT_NEAR(angle_between({1, 0}, {1, 1e-9}), 1e-9, 1e-20);
  EXPECT_ERROR_KIND(angle_between({0, 0}, {1, 0}), ErrorKind::ZeroVector);
}

TEST(Geom, AngleBetweenIsSymmetricAndBounded) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const Vector2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const double t = angle_between(a, b);
    EXPECT_GE(t, 0.0);
    EXPECT_LE(t, kPi);
    EXPECT_DOUBLE_EQ(t, angle_between(b, a));
  }
}

TEST(Geom, NormalizedZeroVector) { EXPECT_ERROR_KIND(Vector2(0, 0).normalized(), ErrorKind::ZeroVector); }

TEST(Geom, DiskRadius) {
  EXPECT_ERROR_KIND(Disk({0, 0}, 0.0), ErrorKind::InvalidRadius);
  EXPECT_ERROR_KIND(Disk({0, 0}, -1.0), ErrorKind::InvalidRadius);
  EXPECT_DOUBLE_EQ(Disk({1, 2}, 3.0).radius(), 3.0);
}

TEST(Geom, PointSegmentDistance) {
  EXPECT_DOUBLE_EQ(point_segment_distance({0, 1}, {-1, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({3, 4}, {0, 0}, {0, 0}), 5.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({2, 0}, {-1, 0}, {1, 0}), 1.0);
  const auto foot = closest_point_on_segment({0.25, 3}, {0, 0}, {1, 0});
  EXPECT_DOUBLE_EQ(foot.t, 0.25);
  EXPECT_DOUBLE_EQ(foot.point.x, 0.25);
}

TEST(Geom, PointInPolygon) {
  const std::vector<Point2> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_EQ(point_in_closed_polygon({0.5, 0.5}, sq), Containment::Inside);
  EXPECT_EQ(point_in_closed_polygon({1.5, 0.5}, sq), Containment::Outside);
  EXPECT_EQ(point_in_closed_polygon({1.0, 0.5}, sq), Containment::OnBoundary);
  EXPECT_EQ(point_in_closed_polygon({0.0, 0.0}, sq), Containment::OnBoundary);
  const std::vector<Point2> two = {{0, 0}, {1, 0}};
  EXPECT_ERROR_KIND(point_in_closed_polygon({0, 0}, two), ErrorKind::DegeneratePolygon);
}

TEST(Geom, PointInNonConvexPolygon) {
  // U shape: the notch is outside.
  const std::vector<Point2> u = {{0, 0}, {3, 0}, {3, 3}, {2, 3}, {2, 1}, {1, 1}, {1, 3}, {0, 3}};
  EXPECT_EQ(point_in_closed_polygon({1.5, 2.0}, u), Containment::Outside);
  EXPECT_EQ(point_in_closed_polygon({1.5, 0.5}, u), Containment::Inside);
  EXPECT_EQ(point_in_closed_polygon({0.5, 2.5}, u), Containment::Inside);
}

TEST(Geom, SegmentsIntersect) {
  EXPECT_TRUE(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  EXPECT_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  EXPECT_TRUE(segments_intersect({0, 0}, {1, 0}, {1, 0}, {2, 5}));  // shared endpoint
  EXPECT_TRUE(segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));  // collinear overlap
  EXPECT_FALSE(segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));
}

TEST(Geom, SignedAreaAndHull) {
  const std::vector<Point2> ccw = {{0, 0}, {2, 0}, {2, 1}, {0, 1}};
  EXPECT_DOUBLE_EQ(signed_area2(ccw), 4.0);
  const std::vector<Point2> cw(ccw.rbegin(), ccw.rend());
  EXPECT_DOUBLE_EQ(signed_area2(cw), -4.0);

  const auto hull = convex_hull({{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}, {0.5, 0.5}});
  ASSERT_EQ(hull.size(), 4u);
  EXPECT_GT(signed_area2(hull), 0.0);
  EXPECT_TRUE(is_convex_ring(hull));
}

TEST(Geom, ConvexRing) {
  EXPECT_TRUE(is_convex_ring(std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_FALSE(is_convex_ring(std::vector<Point2>{{0, 0}, {2, 0}, {1, 0.5}, {2, 2}, {0, 2}}));
}
