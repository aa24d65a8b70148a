#include "curveturn/turn.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "curveturn/curve_io.hpp"

namespace curveturn {

namespace {

double exterior_angle(const Point2& prev, const Point2& at, const Point2& next) {
  const Vector2 u = at - prev;
  const Vector2 v = next - at;
  if (u.is_zero() || v.is_zero()) {
    throw Error(ErrorKind::DuplicateVertex, "turn: duplicate consecutive vertices");
  }
  return angle_between(u, v);
}

std::vector<Point2> subsample(std::span<const Point2> v, std::size_t stride, bool closed) {
  std::vector<Point2> out;
  for (std::size_t i = 0; i < v.size(); i += stride) out.push_back(v[i]);
  if (!closed && (v.size() - 1) % stride != 0) out.push_back(v.back());
  return out;
}

std::size_t subsample_count(std::size_t n, std::size_t stride, bool closed) {
  if (closed) return (n + stride - 1) / stride;
  return (n - 1 + stride - 1) / stride + 1;
}

double inscribed_turn(std::span<const Point2> v, bool closed) {
  return closed ? polygon_turn(v) : polyline_turn(v);
}

}  // namespace

double polyline_turn(std::span<const Point2> vertices) {
  double sum = 0.0;
  for (std::size_t i = 1; i + 1 < vertices.size(); ++i) {
    sum += exterior_angle(vertices[i - 1], vertices[i], vertices[i + 1]);
  }
  return sum;
}

double polygon_turn(std::span<const Point2> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw Error(ErrorKind::DegeneratePolygon, "polygon_turn: need at least 3 vertices");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += exterior_angle(vertices[(i + n - 1) % n], vertices[i], vertices[(i + 1) % n]);
  }
  return sum;
}

std::vector<double> exterior_angles(const SampledCurve& curve) {
  const auto v = curve.vertices();
  const std::size_t n = v.size();
  std::vector<double> out(n, 0.0);
  if (curve.closed()) {
    for (std::size_t i = 0; i < n; ++i) out[i] = exterior_angle(v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = exterior_angle(v[i - 1], v[i], v[i + 1]);
  }
  return out;
}

TurnIndex::TurnIndex(const SampledCurve& curve)
    : angles_(exterior_angles(curve)), cum_(curve.cum_length().begin(), curve.cum_length().end()) {
  prefix_.resize(angles_.size() + 1);
  prefix_[0] = 0.0;
  for (std::size_t i = 0; i < angles_.size(); ++i) prefix_[i + 1] = prefix_[i] + angles_[i];
}

TurnReport dyadic_turn_levels(const SampledCurve& curve, std::size_t max_levels, std::size_t min_vertices) {
  const std::size_t n = curve.size();
  const bool closed = curve.closed();
  min_vertices = std::max<std::size_t>(min_vertices, closed ? 3 : 2);
  std::size_t stride = 1;
  while (stride * 2 < n && subsample_count(n, stride * 2, closed) >= min_vertices) stride *= 2;

  std::vector<std::size_t> strides;
  for (std::size_t s = stride; s >= 1; s /= 2) strides.push_back(s);
  if (max_levels == 0) max_levels = 1;
  if (strides.size() > max_levels) strides.erase(strides.begin(), strides.end() - static_cast<std::ptrdiff_t>(max_levels));

  TurnReport report;
  for (std::size_t s : strides) {
    const auto pts = subsample(curve.vertices(), s, closed);
    report.level_values.push_back(inscribed_turn(pts, closed));
    report.level_vertices.push_back(pts.size());
  }
  report.value = report.level_values.back();
  report.refinement_levels = report.level_values.size() - 1;
  if (report.level_values.size() >= 2) {
    report.last_increment = report.level_values.back() - report.level_values[report.level_values.size() - 2];
  }
  return report;
}

TurnReport curve_turn(const SampledCurve& curve, double tol) {
  TurnReport report = dyadic_turn_levels(curve);
  report.converged = std::abs(report.last_increment) < tol;
  return report;
}

TurnReport curve_turn(const CurveSpec& spec, double tol, std::size_t max_samples) {
  CurveSpec s = spec;
  TurnReport report;
  auto level = [&] {
    const SampledCurve c = generate(s);
    report.level_values.push_back(inscribed_turn(c.vertices(), c.closed()));
    report.level_vertices.push_back(c.size());
  };
  level();
  while (s.samples * 2 <= max_samples) {
    s.samples *= 2;
    level();
    const std::size_t k = report.level_values.size();
    report.last_increment = report.level_values[k - 1] - report.level_values[k - 2];
    if (std::abs(report.last_increment) < tol) {
      report.converged = true;
      break;
    }
  }
  report.value = report.level_values.back();
  report.refinement_levels = report.level_values.size() - 1;
  return report;
}

double arc_turn(const SampledCurve& curve, const ArcRange& range) {
  return polyline_turn(subarc(curve, range).vertices());
}

double turn_additivity_check(const SampledCurve& curve, const ArcRange& range, double c) {
  const double len = arc_length(curve, range);
  const double offset = forward_distance(curve, range.start, c);
  if (!(offset > 0.0 && offset < len)) {
    throw Error(ErrorKind::OutOfRange, "turn_additivity_check: split point outside the arc");
  }
  const double total = curve.total_length();
  const auto cum = curve.cum_length();
  const std::size_t n = curve.size();
  const double snap = 1e-10 * total;

  // Nearest vertex strictly inside the arc.
  double best_offset = offset;
  double angle = 0.0;
  double best_gap = INFINITY;
  const TurnIndex turns(curve);
  for (std::size_t i = 0; i < n; ++i) {
    const double o = forward_distance(curve, range.start, cum[i]);
    if (o <= snap || o >= len - snap) continue;
    const double gap = std::abs(o - offset);
    if (gap < best_gap) {
      best_gap = gap;
      best_offset = o;
      angle = turns.angle(i);
    }
  }
  const double split = range.start + best_offset;
  const double whole = arc_turn(curve, range);
  const double left = arc_turn(curve, {range.start, split});
  const double right = arc_turn(curve, {split, range.start + len});
  return std::abs(whole - left - right - angle);
}

bool is_chain(std::span<const CurvePoint> points, const SampledCurve& curve, double on_curve_tol) {
  for (const auto& p : points) {
    if (distance_to_curve(curve, p.position) > on_curve_tol) {
      throw Error(ErrorKind::PointNotOnCurve, "is_chain: point is not on the curve");
    }
  }
  const std::size_t m = points.size();
  if (m < 2) return true;
  if (!curve.closed()) {
    bool up = true, down = true;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      up = up && points[k].s < points[k + 1].s;
      down = down && points[k].s > points[k + 1].s;
    }
    return up || down;
  }
  const double total = curve.total_length();
  std::vector<double> s(m);
  for (std::size_t k = 0; k < m; ++k) {
    double w = std::fmod(points[k].s, total);
    if (w < 0.0) w += total;
    s[k] = w;
  }
  std::size_t descents = 0, ascents = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const double a = s[k], b = s[(k + 1) % m];
    if (a == b) return false;
    if (b < a) ++descents; else ++ascents;
  }
  return descents == 1 || ascents == 1;
}

std::vector<AngularPoint> angular_points(const SampledCurve& curve, double threshold) {
  if (!(threshold > 0.0 && threshold <= kPi)) {
    throw Error(ErrorKind::OutOfRange, "angular_points: threshold must lie in (0, pi]");
  }
  const auto angles = exterior_angles(curve);
  const auto cum = curve.cum_length();
  std::vector<AngularPoint> out;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (angles[i] > threshold) out.push_back({cum[i], angles[i], i});
  }
  return out;
}

std::vector<TurnProfileEntry> turn_profile(const SampledCurve& curve) {
  const auto angles = exterior_angles(curve);
  const auto cum = curve.cum_length();
  const std::size_t n = curve.size();
  std::vector<TurnProfileEntry> out;
  out.reserve(n + 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 1 && i + 1 < n) acc += angles[i];
    out.push_back({cum[i], acc});
  }
  if (curve.closed()) {
    double total = 0.0;
    for (double a : angles) total += a;
    out.push_back({curve.total_length(), total});
  }
  return out;
}

void write_turn_profile_csv(std::ostream& out, std::span<const TurnProfileEntry> profile) {
  out << "s,kappa_cum\n";
  for (const auto& row : profile) out << format_real(row.s) << ',' << format_real(row.cumulative) << '\n';
}

}  // namespace curveturn
