#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "curveturn/geom.hpp"
#include "curveturn/segment_index.hpp"

namespace curveturn {

/// A curve stored as an arc-length-tagged polyline.  Closed curves are simple
/// polygons (validated at construction); the closing edge runs from the last
/// vertex back to the first.
class SampledCurve {
 public:
  SampledCurve(std::vector<Point2> vertices, bool closed);

  static SampledCurve make_closed(std::vector<Point2> vertices) { return {std::move(vertices), true}; }
  static SampledCurve make_open(std::vector<Point2> vertices) { return {std::move(vertices), false}; }

  std::span<const Point2> vertices() const { return vertices_; }
  const Point2& vertex(std::size_t i) const { return vertices_[i]; }
  std::size_t size() const { return vertices_.size(); }
  bool closed() const { return closed_; }

  /// cum_length()[i] is the polyline length up to vertex i; closed curves carry
  /// one extra entry, the total length including the closing edge.
  std::span<const double> cum_length() const { return cum_; }
  double total_length() const { return cum_.back(); }

  std::size_t edge_count() const { return closed_ ? vertices_.size() : vertices_.size() - 1; }
  double edge_length(std::size_t e) const { return cum_[e + 1] - cum_[e]; }
  double max_spacing() const { return max_spacing_; }

  /// Larger of the two edges incident to vertex i (the single edge at open ends).
  double local_spacing(std::size_t i) const;

  const SegmentIndex& index() const { return *index_; }

 private:
  std::vector<Point2> vertices_;
  bool closed_;
  std::vector<double> cum_;
  double max_spacing_ = 0.0;
  std::shared_ptr<const SegmentIndex> index_;
};

/// Arc of a curve from arc-length parameter `start` to `end` following the
/// stored orientation.  On closed curves the range wraps modulo the length;
/// start == end is rejected, a full loop is written {s, s + L}.
struct ArcRange {
  double start = 0.0;
  double end = 0.0;
};

struct CurvePoint {
  double s = 0.0;
  Point2 position;
  std::size_t index = 0;  // edge containing s
};

/// Relative length below which an arc is treated as degenerate.
inline constexpr double kDegenerateArcFraction = 1e-9;

/// Length of `range` on `curve`.  Throws DegenerateRange / OutOfRange.
double arc_length(const SampledCurve& curve, const ArcRange& range);

CurvePoint point_at(const SampledCurve& curve, double s);

/// Open polyline following `range`, endpoints interpolated.
SampledCurve subarc(const SampledCurve& curve, const ArcRange& range);

/// Closed curves only: the arc covering the rest of the curve.
SampledCurve complement_arc(const SampledCurve& curve, const ArcRange& range);

ArcRange complement_range(const SampledCurve& curve, const ArcRange& range);

/// Equal arc-length resampling of the stored polyline.
SampledCurve resample(const SampledCurve& curve, std::size_t n);

/// Orthogonal projection of p onto the curve.
CurvePoint nearest_point(const SampledCurve& curve, const Point2& p);

double distance_to_curve(const SampledCurve& curve, const Point2& p);

/// Largest vertex-to-vertex distance.
double diameter(const SampledCurve& curve);

/// Arc length travelled from s0 to s1 along the orientation (wrapping when closed).
double forward_distance(const SampledCurve& curve, double s0, double s1);

}  // namespace curveturn
