#include "curveturn/ltb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curveturn {

namespace {

struct ArcPair {
  ArcRange range[2];
  double turn[2];
  double length[2];
  int count = 2;
};

ArcPair both_arcs(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b) {
  ArcPair p;
  if (!curve.closed()) {
    const double lo = std::min(a.s, b.s), hi = std::max(a.s, b.s);
    p.count = 1;
    p.range[0] = {lo, hi};
  } else {
    p.range[0] = {a.s, b.s};
    p.range[1] = {b.s, a.s};
  }
  for (int k = 0; k < p.count; ++k) {
    p.length[k] = arc_length(curve, p.range[k]);
    p.turn[k] = arc_turn(curve, p.range[k]);
  }
  return p;
}

StraightestArcResult pick(const ArcPair& p, int k, bool ambiguous) {
  StraightestArcResult r;
  r.range = p.range[k];
  r.turn = p.turn[k];
  r.length = p.length[k];
  r.complement_turn = p.count == 2 ? p.turn[1 - k] : 0.0;
  r.ambiguous = ambiguous;
  return r;
}

}  // namespace

StraightestArcResult straightest_arc(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b,
                                     double delta, double tol) {
  if (!(distance(a.position, b.position) < delta)) {
    throw Error(ErrorKind::OutOfRange, "straightest_arc: points are not closer than delta");
  }
  const ArcPair p = both_arcs(curve, a, b);
  const double limit = kPi / 2.0 + tol;
  if (p.count == 1) {
    if (p.turn[0] > limit) throw Error(ErrorKind::NoStraightArc, "straightest_arc: arc turns more than pi/2");
    return pick(p, 0, false);
  }
  const bool ok0 = p.turn[0] <= limit, ok1 = p.turn[1] <= limit;
  if (!ok0 && !ok1) throw Error(ErrorKind::NoStraightArc, "straightest_arc: both arcs turn more than pi/2");
  if (ok0 && ok1) return pick(p, p.length[0] <= p.length[1] ? 0 : 1, true);
  return pick(p, ok0 ? 0 : 1, false);
}

StraightestArcResult lesser_turn_arc(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b) {
  const ArcPair p = both_arcs(curve, a, b);
  if (p.count == 1) return pick(p, 0, false);
  int k = p.turn[0] < p.turn[1] ? 0 : 1;
  if (std::abs(p.turn[0] - p.turn[1]) <= 1e-12) k = p.length[0] <= p.length[1] ? 0 : 1;
  return pick(p, k, false);
}

LtbReport max_delta(const SampledCurve& curve, double theta) {
  if (!(theta > 0.0 && theta <= kPi)) throw Error(ErrorKind::OutOfRange, "max_delta: theta must lie in (0, pi]");
  if (!curve.closed()) throw Error(ErrorKind::OutOfRange, "max_delta: curve must be closed");
  const TurnIndex turns(curve);
  const auto v = curve.vertices();
  const std::size_t n = v.size();

  LtbReport report;
  report.theta = theta;
  report.sampling_slack = curve.max_spacing();
  double best = std::numeric_limits<double>::infinity();
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double t1 = turns.between(i, j);
      if (!(t1 > theta)) continue;
      const double t2 = turns.between(j, i);
      if (!(t2 > theta)) continue;
      ++report.violations;
      const double d2 = distance2(v[i], v[j]);
      if (d2 < best) {
        best = d2;
        bi = i;
        bj = j;
      }
    }
  }
  report.pairs_scanned = n * (n - 1) / 2;
  const auto cum = curve.cum_length();
  if (report.violations == 0) {
    report.capped = true;
    report.delta = diameter(curve);
    return report;
  }
  report.delta = std::sqrt(best);
  report.witness_a = {cum[bi], v[bi], bi};
  report.witness_b = {cum[bj], v[bj], bj};
  return report;
}

LipschitzReport lipschitz_constant(const SampledCurve& curve, double min_len, double angular_threshold) {
  LipschitzReport report;
  report.min_arc_length_used = min_len > 0.0 ? min_len : 4.0 * curve.max_spacing();
  const auto corners = angular_points(curve, angular_threshold);
  report.angular_points = corners.size();
  const auto cum = curve.cum_length();
  if (!corners.empty()) {
    report.infinite = true;
    report.k = std::numeric_limits<double>::infinity();
    const double s = corners.front().s;
    const double half = 0.5 * curve.max_spacing();
    report.witness_range = curve.closed() ? ArcRange{s - half, s + half}
                                          : ArcRange{std::max(0.0, s - half), std::min(curve.total_length(), s + half)};
    return report;
  }
  const TurnIndex turns(curve);
  const std::size_t n = curve.size();
  const double min_length = report.min_arc_length_used;
  double best = 0.0;
  std::size_t bi = 0, bj = 0;
  bool found = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = curve.closed() ? 0 : i + 1; j < n; ++j) {
      if (j == i) continue;
      const double len = turns.length_between(i, j);
      if (len < min_length) continue;
      // Half of each end angle belongs to the range; without it the ratio
      // is biased low by one vertex angle.
      const double ratio = (turns.between(i, j) + 0.5 * (turns.angle(i) + turns.angle(j))) / len;
      if (!found || ratio > best) {
        best = ratio;
        bi = i;
        bj = j;
        found = true;
      }
    }
  }
  report.k = best;
  if (found) report.witness_range = {cum[bi], cum[bj]};
  return report;
}

bool local_connectivity_check(const SampledCurve& curve, const CurvePoint& a, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidRadius, "local_connectivity_check: eps must be positive");
  const auto v = curve.vertices();
  const std::size_t n = v.size();
  const std::size_t edges = curve.edge_count();
  auto inside = [&](std::size_t i) { return distance(v[i % n], a.position) < eps; };
  auto hits = [&](std::size_t e) { return point_segment_distance(a.position, v[e], v[(e + 1) % n]) < eps; };

  // A segment meets a disk in one interval; consecutive hits join through
  // their shared vertex when it lies inside.
  std::vector<char> hit(edges);
  for (std::size_t e = 0; e < edges; ++e) hit[e] = hits(e) ? 1 : 0;
  std::size_t components = 0;
  for (std::size_t e = 0; e < edges; ++e) {
    if (!hit[e]) continue;
    bool joined = false;
    if (e > 0) {
      joined = hit[e - 1] && inside(e);
    } else if (curve.closed()) {
      joined = hit[edges - 1] && inside(0);
    }
    if (!joined) ++components;
  }
  // Zero components: the whole closed curve lies in the disk.
  return components <= 1;
}

bool distance_monotonicity_check(const SampledCurve& curve, const CurvePoint& a, double delta) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidRadius, "distance_monotonicity_check: delta must be positive");
  const auto v = curve.vertices();
  const auto cum = curve.cum_length();
  const std::size_t n = v.size();
  const double radius = delta / 2.0;
  const double tau = 1e-9 * curve.total_length();
  const double snap = 1e-12 * curve.total_length();

  // Vertices strictly ahead of / behind a along the parameter.
  std::size_t next = static_cast<std::size_t>(std::upper_bound(cum.begin(), cum.begin() + n, a.s + snap) - cum.begin());
  std::size_t prev_v = static_cast<std::size_t>(std::lower_bound(cum.begin(), cum.begin() + n, a.s - snap) - cum.begin());

  // Closed walks stop after half the length so the two sides never overlap.
  const double budget = curve.closed() ? 0.5 * curve.total_length() : curve.total_length();

  auto walk = [&](std::size_t start, bool forward, std::size_t steps_available) {
    double last = 0.0;
    double travelled = 0.0;
    Point2 from = a.position;
    std::size_t k = start;
    for (std::size_t step = 0; step < steps_available; ++step) {
      const Point2& p = v[k];
      const double d = distance(p, a.position);
      // The distance along an edge is convex; a dip sits at the foot of a.
      const SegmentFoot foot = closest_point_on_segment(a.position, from, p);
      const double dip = distance(foot.point, a.position);
      if (foot.t > 0.0 && foot.t < 1.0 && dip < last - tau && dip < radius) return false;
      travelled += distance(from, p);
      if (travelled > budget) return true;
      if (d >= radius) return true;
      if (d < last - tau) return false;
      last = d;
      from = p;
      if (forward) {
        k = (k + 1) % n;
      } else {
        k = (k + n - 1) % n;
      }
    }
    return true;
  };

  if (curve.closed()) {
    const std::size_t ahead = next % n;
    const std::size_t behind = (prev_v + n - 1) % n;
    return walk(ahead, true, n) && walk(behind, false, n);
  }
  const bool fwd = next < n ? walk(next, true, n - next) : true;
  const bool bwd = prev_v > 0 ? walk(prev_v - 1, false, prev_v) : true;
  return fwd && bwd;
}

}  // namespace curveturn
