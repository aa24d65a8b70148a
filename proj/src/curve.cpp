#include "curveturn/curve.hpp"

#include <algorithm>
#include <cmath>

namespace curveturn {

namespace {

// Endpoints closer than this (relative to the length) to a vertex snap onto it.
constexpr double kSnapFraction = 1e-10;

double wrap(double s, double length) {
  double r = std::fmod(s, length);
  if (r < 0.0) r += length;
  if (r >= length) r = 0.0;
  return r;
}

}  // namespace

SampledCurve::SampledCurve(std::vector<Point2> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  const std::size_t n = vertices_.size();
  if (closed_ && n < 3) {
    throw Error(ErrorKind::DegeneratePolygon, "SampledCurve: closed curve needs at least 3 vertices");
  }
  if (!closed_ && n < 2) {
    throw Error(ErrorKind::DegeneratePolygon, "SampledCurve: open curve needs at least 2 vertices");
  }
  const std::size_t edges = closed_ ? n : n - 1;
  cum_.resize(edges + 1);
  cum_[0] = 0.0;
  for (std::size_t e = 0; e < edges; ++e) {
    const double len = distance(vertices_[e], vertices_[(e + 1) % n]);
    if (!(len > 0.0)) {
      throw Error(ErrorKind::DuplicateVertex, "SampledCurve: duplicate consecutive vertices");
    }
    cum_[e + 1] = cum_[e] + len;
    max_spacing_ = std::max(max_spacing_, len);
  }
  index_ = std::make_shared<const SegmentIndex>(vertices_, closed_);
  if (closed_) {
    // Fold-backs between adjacent edges are invisible to the non-adjacent test.
    for (std::size_t i = 0; i < n; ++i) {
      const Vector2 e1 = vertices_[i] - vertices_[(i + n - 1) % n];
      const Vector2 e2 = vertices_[(i + 1) % n] - vertices_[i];
      if (dot(e1, e2) < 0.0 && std::abs(cross(e1, e2)) <= 1e-12 * e1.norm() * e2.norm()) {
        throw Error(ErrorKind::NotSimple, "SampledCurve: polygon folds back on itself");
      }
    }
    if (index_->has_self_intersection(Tolerances{}.orientation * 1e-3)) {
      throw Error(ErrorKind::NotSimple, "SampledCurve: polygon is not simple");
    }
  }
}

double SampledCurve::local_spacing(std::size_t i) const {
  const std::size_t n = vertices_.size();
  if (closed_) return std::max(edge_length(i), edge_length((i + n - 1) % n));
  if (i == 0) return edge_length(0);
  if (i + 1 == n) return edge_length(n - 2);
  return std::max(edge_length(i), edge_length(i - 1));
}

double arc_length(const SampledCurve& curve, const ArcRange& range) {
  const double total = curve.total_length();
  if (!std::isfinite(range.start) || !std::isfinite(range.end)) {
    throw Error(ErrorKind::OutOfRange, "arc range: non-finite bound");
  }
  if (range.start == range.end) {
    throw Error(ErrorKind::DegenerateRange, "arc range: start equals end");
  }
  double len = 0.0;
  if (curve.closed()) {
    len = range.end - range.start;
    if (len <= 0.0) len += total;
    if (len <= 0.0 || len > total * (1.0 + 1e-12)) {
      throw Error(ErrorKind::OutOfRange, "arc range: span exceeds the curve length");
    }
    len = std::min(len, total);
  } else {
    if (range.start < 0.0 || range.end > total * (1.0 + 1e-12) || range.end < range.start) {
      throw Error(ErrorKind::OutOfRange, "arc range: outside the open curve");
    }
    len = std::min(range.end, total) - range.start;
  }
  if (len < kDegenerateArcFraction * total) {
    throw Error(ErrorKind::DegenerateRange, "arc range: arc shorter than the degeneracy threshold");
  }
  return len;
}

CurvePoint point_at(const SampledCurve& curve, double s) {
  const double total = curve.total_length();
  if (!std::isfinite(s)) throw Error(ErrorKind::OutOfRange, "point_at: non-finite parameter");
  if (curve.closed()) {
    s = wrap(s, total);
  } else {
    if (s < 0.0 || s > total * (1.0 + 1e-12)) {
      throw Error(ErrorKind::OutOfRange, "point_at: parameter outside the open curve");
    }
    s = std::min(s, total);
  }
  const auto cum = curve.cum_length();
  const std::size_t edges = curve.edge_count();
  auto it = std::upper_bound(cum.begin(), cum.end(), s);
  std::size_t e = it == cum.begin() ? 0 : static_cast<std::size_t>(it - cum.begin()) - 1;
  e = std::min(e, edges - 1);
  const Point2& a = curve.vertex(e);
  const Point2& b = curve.vertex((e + 1) % curve.size());
  const double t = (s - cum[e]) / curve.edge_length(e);
  if (t <= 0.0) return {s, a, e};
  if (t >= 1.0) return {s, b, e};
  return {s, lerp(a, b, t), e};
}

namespace {

// Open polyline starting at s0 and running `len` along the orientation.
SampledCurve subarc_by_length(const SampledCurve& curve, double s0, double len) {
  const double total = curve.total_length();
  const double snap = kSnapFraction * total;
  const auto cum = curve.cum_length();
  const std::size_t n = curve.size();
  const bool closed = curve.closed();

  // Vertex k on the unwrapped parameter line; closed curves run k past n.
  auto unwrapped = [&](std::size_t k) {
    return closed ? cum[k % n] + total * static_cast<double>(k / n) : cum[k];
  };
  const std::size_t limit = closed ? 2 * n + 1 : n;
  const double u1 = s0 + len;

  const auto searchable = closed ? cum : cum.first(n);
  std::size_t k = static_cast<std::size_t>(
      std::lower_bound(searchable.begin(), searchable.end(), s0 - snap) - searchable.begin());

  std::vector<Point2> pts;
  if (k < limit && std::abs(unwrapped(k) - s0) <= snap) {
    pts.push_back(curve.vertex(k % n));
    ++k;
  } else {
    pts.push_back(point_at(curve, s0).position);
  }
  while (k < limit && unwrapped(k) < u1 - snap) {
    pts.push_back(curve.vertex(k % n));
    ++k;
  }
  if (k < limit && std::abs(unwrapped(k) - u1) <= snap) {
    pts.push_back(curve.vertex(k % n));
  } else {
    pts.push_back(point_at(curve, closed ? wrap(u1, total) : std::min(u1, total)).position);
  }
  return SampledCurve::make_open(std::move(pts));
}

}  // namespace

SampledCurve subarc(const SampledCurve& curve, const ArcRange& range) {
  const double len = arc_length(curve, range);
  const double s0 = curve.closed() ? wrap(range.start, curve.total_length()) : range.start;
  return subarc_by_length(curve, s0, len);
}

ArcRange complement_range(const SampledCurve& curve, const ArcRange& range) {
  if (!curve.closed()) throw Error(ErrorKind::OutOfRange, "complement_arc: curve is open");
  const double total = curve.total_length();
  const double len = arc_length(curve, range);
  const double rest = total - len;
  if (rest < kDegenerateArcFraction * total) {
    throw Error(ErrorKind::DegenerateRange, "complement_arc: complement is empty");
  }
  const double s0 = wrap(range.start + len, total);
  return {s0, s0 + rest};
}

SampledCurve complement_arc(const SampledCurve& curve, const ArcRange& range) {
  const ArcRange c = complement_range(curve, range);
  return subarc_by_length(curve, c.start, c.end - c.start);
}

SampledCurve resample(const SampledCurve& curve, std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidN, "resample: need at least 3 samples");
  const double total = curve.total_length();
  std::vector<Point2> pts;
  pts.reserve(n);
  if (curve.closed()) {
    for (std::size_t k = 0; k < n; ++k) {
      pts.push_back(point_at(curve, total * static_cast<double>(k) / static_cast<double>(n)).position);
    }
  } else {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      pts.push_back(point_at(curve, total * static_cast<double>(k) / static_cast<double>(n - 1)).position);
    }
    pts.push_back(curve.vertex(curve.size() - 1));
  }
  return {std::move(pts), curve.closed()};
}

CurvePoint nearest_point(const SampledCurve& curve, const Point2& p) {
  const auto hit = curve.index().nearest(p);
  const double s = curve.cum_length()[hit.segment] + hit.t * curve.edge_length(hit.segment);
  return {curve.closed() ? wrap(s, curve.total_length()) : s, hit.point, hit.segment};
}

double distance_to_curve(const SampledCurve& curve, const Point2& p) {
  return curve.index().nearest(p).distance;
}

double diameter(const SampledCurve& curve) {
  const std::vector<Point2> hull =
      convex_hull(std::vector<Point2>(curve.vertices().begin(), curve.vertices().end()));
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) best = std::max(best, distance2(hull[i], hull[j]));
  }
  return std::sqrt(best);
}

double forward_distance(const SampledCurve& curve, double s0, double s1) {
  if (!curve.closed()) return s1 - s0;
  const double total = curve.total_length();
  double d = wrap(s1, total) - wrap(s0, total);
  if (d < 0.0) d += total;
  return d;
}

}  // namespace curveturn
