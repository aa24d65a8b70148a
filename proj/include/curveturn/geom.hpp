#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "curveturn/error.hpp"

namespace curveturn {

inline constexpr double kPi = std::numbers::pi;

// Default predicate tolerances, in curve-coordinate units.
struct Tolerances {
  double boundary = 1e-9;
  double orientation = 1e-9;
};

class Vector2 {
 public:
  double dx = 0.0;
  double dy = 0.0;

  constexpr Vector2() = default;
  Vector2(double dx_, double dy_) : dx(dx_), dy(dy_) {
    if (!std::isfinite(dx) || !std::isfinite(dy)) {
      throw Error(ErrorKind::NonFinite, "Vector2: non-finite component");
    }
  }

  double norm() const { return std::hypot(dx, dy); }
  double norm2() const { return dx * dx + dy * dy; }
  bool is_zero() const { return dx == 0.0 && dy == 0.0; }

  /// Counter-clockwise quarter turn.
  Vector2 perp() const { return {-dy, dx}; }
  Vector2 normalized() const;

  Vector2 operator-() const { return {-dx, -dy}; }
  Vector2 operator+(const Vector2& o) const { return {dx + o.dx, dy + o.dy}; }
  Vector2 operator-(const Vector2& o) const { return {dx - o.dx, dy - o.dy}; }
  Vector2 operator*(double s) const { return {dx * s, dy * s}; }
  Vector2 operator/(double s) const { return {dx / s, dy / s}; }
  bool operator==(const Vector2&) const = default;
};

inline Vector2 operator*(double s, const Vector2& v) { return v * s; }
inline double dot(const Vector2& u, const Vector2& v) { return u.dx * v.dx + u.dy * v.dy; }
inline double cross(const Vector2& u, const Vector2& v) { return u.dx * v.dy - u.dy * v.dx; }

class Point2 {
 public:
  double x = 0.0;
  double y = 0.0;

  constexpr Point2() = default;
  Point2(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(ErrorKind::NonFinite, "Point2: non-finite coordinate");
    }
  }

  Point2 operator+(const Vector2& v) const { return {x + v.dx, y + v.dy}; }
  Point2 operator-(const Vector2& v) const { return {x - v.dx, y - v.dy}; }
  Vector2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  bool operator==(const Point2&) const = default;
};

inline double distance(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline double distance2(const Point2& a, const Point2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Linear interpolation a + t (b - a).
inline Point2 lerp(const Point2& a, const Point2& b, double t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

class Disk {
 public:
  Disk(Point2 center, double radius);

  const Point2& center() const { return center_; }
  double radius() const { return radius_; }

 private:
  Point2 center_;
  double radius_;
};

/// Unsigned angle in [0, pi] between two directions, via atan2(|u x v|, u . v).
/// Throws ZeroVector when either argument is zero.
double angle_between(const Vector2& u, const Vector2& v);

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b);

/// Closest point of the closed segment [a, b] to p, with its parameter in [0, 1].
struct SegmentFoot {
  Point2 point;
  double t = 0.0;
};
SegmentFoot closest_point_on_segment(const Point2& p, const Point2& a, const Point2& b);

enum class Containment { Inside, Outside, OnBoundary };

/// Even-odd classification against the closed polygon `poly` with an explicit
/// boundary band of width `boundary_tol`.  `known_self_intersecting` lets the
/// caller forward the result of its own simplicity test.
Containment point_in_closed_polygon(const Point2& p, std::span<const Point2> poly,
                                    double boundary_tol = Tolerances{}.boundary,
                                    bool known_self_intersecting = false);

/// True iff the closed segments share a point, with collinearity decided up
/// to `orientation_tol`.
bool segments_intersect(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2,
                        double orientation_tol = Tolerances{}.orientation);

/// Twice the signed area; positive for counter-clockwise rings.
double signed_area2(std::span<const Point2> ring);

/// Andrew's monotone chain; counter-clockwise, no collinear points.
std::vector<Point2> convex_hull(std::vector<Point2> points);

/// True when the ring is weakly convex: every turn has the same orientation (or is flat).
bool is_convex_ring(std::span<const Point2> ring, double orientation_tol = Tolerances{}.orientation);

std::string_view to_string(Containment c);

}  // namespace curveturn
