#include "curveturn/geom.hpp"

#include <algorithm>

namespace curveturn {

Vector2 Vector2::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(ErrorKind::ZeroVector, "normalized: zero vector");
  return {dx / n, dy / n};
}

Disk::Disk(Point2 center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::InvalidRadius, "Disk: radius must be positive and finite");
  }
}

double angle_between(const Vector2& u, const Vector2& v) {
  if (u.is_zero() || v.is_zero()) {
    throw Error(ErrorKind::ZeroVector, "angle_between: zero-length direction");
  }
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

SegmentFoot closest_point_on_segment(const Point2& p, const Point2& a, const Point2& b) {
  const Vector2 ab = b - a;
  const double len2 = ab.norm2();
  if (len2 == 0.0) return {a, 0.0};
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return {lerp(a, b, t), t};
}

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
  return distance(p, closest_point_on_segment(p, a, b).point);
}

Containment point_in_closed_polygon(const Point2& p, std::span<const Point2> poly,
                                    double boundary_tol, bool known_self_intersecting) {
  if (poly.size() < 3 || known_self_intersecting) {
    throw Error(ErrorKind::DegeneratePolygon, "point_in_closed_polygon: degenerate polygon");
  }
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = poly[j];
    const Point2& b = poly[i];
    if (point_segment_distance(p, a, b) <= boundary_tol) return Containment::OnBoundary;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside ? Containment::Inside : Containment::Outside;
}

namespace {

// Signed distance of c from the line (a, b); zero for a degenerate segment.
double side_of(const Point2& a, const Point2& b, const Point2& c) {
  const Vector2 ab = b - a;
  const double len = ab.norm();
  if (len == 0.0) return 0.0;
  return cross(ab, c - a) / len;
}

int sign_with_tol(double v, double tol) {
  if (v > tol) return 1;
  if (v < -tol) return -1;
  return 0;
}

}  // namespace

bool segments_intersect(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2,
                        double orientation_tol) {
  const int o1 = sign_with_tol(side_of(a1, a2, b1), orientation_tol);
  const int o2 = sign_with_tol(side_of(a1, a2, b2), orientation_tol);
  const int o3 = sign_with_tol(side_of(b1, b2, a1), orientation_tol);
  const int o4 = sign_with_tol(side_of(b1, b2, a2), orientation_tol);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  // Touching and collinear configurations: some endpoint lies on the other segment.
  return point_segment_distance(b1, a1, a2) <= orientation_tol ||
         point_segment_distance(b2, a1, a2) <= orientation_tol ||
         point_segment_distance(a1, b1, b2) <= orientation_tol ||
         point_segment_distance(a2, b1, b2) <= orientation_tol;
}

double signed_area2(std::span<const Point2> ring) {
  double acc = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    acc += ring[j].x * ring[i].y - ring[i].x * ring[j].y;
  }
  return acc;
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool is_convex_ring(std::span<const Point2> ring, double orientation_tol) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  int orientation = 0;
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& prev = ring[(i + n - 1) % n];
    const Point2& cur = ring[i];
    const Point2& next = ring[(i + 1) % n];
    const Vector2 e1 = cur - prev;
    const Vector2 e2 = next - cur;
    if (e1.is_zero() || e2.is_zero()) return false;
    const int s = sign_with_tol(cross(e1, e2) / e1.norm(), orientation_tol);
    if (s != 0) {
      if (orientation != 0 && s != orientation) return false;
      orientation = s;
    }
    winding += std::atan2(cross(e1, e2), dot(e1, e2));
  }
  return orientation != 0 && std::abs(std::abs(winding) - 2.0 * kPi) < 1e-6;
}

std::string_view to_string(Containment c) {
  switch (c) {
    case Containment::Inside: return "Inside";
    case Containment::Outside: return "Outside";
    case Containment::OnBoundary: return "OnBoundary";
  }
  return "?";
}

}  // namespace curveturn
