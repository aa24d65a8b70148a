#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "curveturn/geom.hpp"

namespace curveturn {

/// Static bounding-volume hierarchy over the edges of a polyline or polygon.
/// Segment i joins vertex i to vertex i+1 (to vertex 0 for the closing edge).
class SegmentIndex {
 public:
  SegmentIndex(std::span<const Point2> vertices, bool closed);

  struct Nearest {
    double distance = 0.0;
    std::size_t segment = 0;
    double t = 0.0;  // parameter along the segment
    Point2 point;
  };

  struct RayHit {
    double t = 0.0;  // ray parameter, hit = origin + t * dir
    std::size_t segment = 0;
    double u = 0.0;  // parameter along the segment
    Point2 point;
  };

  std::size_t segment_count() const { return seg_a_.size(); }
  bool closed() const { return closed_; }

  Nearest nearest(const Point2& p) const;

  /// True when some segment comes strictly closer to p than d.
  bool any_within(const Point2& p, double d) const;

  /// Even-odd classification with a boundary band; closed rings only.
  Containment classify(const Point2& p, double boundary_tol) const;

  /// Crossing-number parity without the boundary band; closed rings only.
  bool crossing_inside(const Point2& p) const;

  /// First intersection of the half-line origin + t dir (t > t_min) with the edges.
  std::optional<RayHit> first_ray_hit(const Point2& origin, const Vector2& dir,
                                      double t_min = 0.0) const;

  /// True when two non-adjacent edges intersect.
  bool has_self_intersection(double orientation_tol) const;

 private:
  struct Box {
    double min_x, min_y, max_x, max_y;
  };
  struct Node {
    Box box;
    std::size_t left = 0, right = 0;  // children when not a leaf
    std::size_t begin = 0, end = 0;   // range into order_ when a leaf
    bool leaf = false;
  };

  std::size_t build(std::size_t begin, std::size_t end);
  static double box_distance2(const Box& b, const Point2& p);
  bool adjacent(std::size_t i, std::size_t j) const;

  bool closed_;
  std::vector<Point2> seg_a_, seg_b_;
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

}  // namespace curveturn
