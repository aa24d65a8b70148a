#include "curveturn/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "curveturn/curve_io.hpp"
#include "curveturn/turn.hpp"

namespace curveturn {

namespace {

Vector2 raw_normal(const SampledCurve& curve, std::size_t i) {
  const std::size_t n = curve.size();
  const Point2& prev = curve.vertex((i + n - 1) % n);
  const Point2& next = curve.vertex((i + 1) % n);
  const Vector2 t = next - prev;
  if (t.is_zero()) throw Error(ErrorKind::DegenerateTangent, "normal_at: neighbours coincide");
  return t.normalized().perp();
}

// +1 when the left normal points inwards (counter-clockwise ring).
double orientation_sign(const SampledCurve& curve) { return signed_area2(curve.vertices()) >= 0.0 ? 1.0 : -1.0; }

Vector2 oriented_normal(const SampledCurve& curve, std::size_t i, double sign) {
  Vector2 nrm = raw_normal(curve, i) * sign;
  const double eps = 1e-3 * curve.local_spacing(i);
  const Point2 probe = curve.vertex(i) + nrm * eps;
  const double band = 1e-6 * eps;
  if (curve.index().classify(probe, band) == Containment::Outside &&
      curve.index().classify(curve.vertex(i) + nrm * -eps, band) == Containment::Inside) {
    nrm = nrm * -1.0;
  }
  return nrm;
}

Vector2 unit_tangent(const SampledCurve& curve, std::size_t i) {
  const std::size_t n = curve.size();
  const Vector2 t = curve.vertex((i + 1) % n) - curve.vertex((i + n - 1) % n);
  if (t.is_zero()) throw Error(ErrorKind::DegenerateTangent, "reach: neighbours coincide");
  return t.normalized();
}

}  // namespace

Vector2 normal_at(const SampledCurve& curve, std::size_t i) {
  if (!curve.closed()) throw Error(ErrorKind::OutOfRange, "normal_at: curve must be closed");
  if (i >= curve.size()) throw Error(ErrorKind::OutOfRange, "normal_at: vertex index out of range");
  return oriented_normal(curve, i, orientation_sign(curve));
}

std::string_view to_string(DiskSide side) { return side == DiskSide::Inside ? "inside" : "outside"; }

std::string_view to_string(ReachMethod m) {
  return m == ReachMethod::PairwiseFederer ? "pairwise_federer" : "osculating_bisection";
}

double osculating_tolerance(double spacing, double r, double total_length) {
  return spacing * spacing / r + 1e-9 * total_length;
}

OsculatingReport par_regular_check(const SampledCurve& curve, double r, bool first_failure_only) {
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidRadius, "par_regular_check: r must be positive");
  if (!curve.closed()) throw Error(ErrorKind::OutOfRange, "par_regular_check: curve must be closed");
  const double sign = orientation_sign(curve);
  const double total = curve.total_length();
  const double band = 1e-9 * total;
  const auto cum = curve.cum_length();
  const SegmentIndex& index = curve.index();

  OsculatingReport report;
  report.r = r;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Point2& a = curve.vertex(i);
    const Vector2 nrm = oriented_normal(curve, i, sign);
    const double tau = osculating_tolerance(curve.local_spacing(i), r, total);
    report.tau_osc = std::max(report.tau_osc, tau);
    for (DiskSide side : {DiskSide::Inside, DiskSide::Outside}) {
      const Point2 c = a + nrm * (side == DiskSide::Inside ? r : -r);
      // Clearance above r - tau > band also rules out the boundary band.
      const bool close = index.any_within(c, std::max(r - tau, band));
      if (close || index.crossing_inside(c) != (side == DiskSide::Inside)) {
        report.failures.push_back({cum[i], side, index.nearest(c).distance, i, c});
        if (first_failure_only) break;
      }
    }
    if (first_failure_only && !report.failures.empty()) break;
  }
  report.ok = report.failures.empty();
  for (const auto& f : report.failures) {
    if (!report.worst || f.clearance < report.worst->clearance) report.worst = f;
  }
  return report;
}

void write_failures_csv(std::ostream& out, std::span<const OsculatingFailure> failures) {
  out << "s,side,clearance\n";
  for (const auto& f : failures) out << format_real(f.s) << ',' << to_string(f.side) << ',' << format_real(f.clearance) << '\n';
}

ReachReport reach_pairwise(const SampledCurve& curve) {
  if (!curve.closed()) throw Error(ErrorKind::OutOfRange, "reach_pairwise: curve must be closed");
  if (!angular_points(curve, kDefaultAngularThreshold).empty()) {
    throw Error(ErrorKind::CornerPresent, "reach_pairwise: curve has angular points");
  }
  const auto v = curve.vertices();
  const std::size_t n = v.size();
  const double tau = kReachTangentialFraction * curve.total_length();
  std::vector<Vector2> tangents;
  tangents.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tangents.push_back(unit_tangent(curve, i));

  ReachReport report;
  report.method = ReachMethod::PairwiseFederer;
  report.resolution = n;
  double best = std::numeric_limits<double>::infinity();
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Vector2& t = tangents[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double wx = v[j].x - a.x, wy = v[j].y - a.y;
      const double normal = std::abs(t.dx * wy - t.dy * wx);
      if (normal < tau) {
        ++report.pairs_skipped;
        continue;
      }
      const double value = (wx * wx + wy * wy) / (2.0 * normal);
      if (value < best) {
        best = value;
        bi = i;
        bj = j;
      }
    }
  }
  const auto cum = curve.cum_length();
  if (!std::isfinite(best)) best = diameter(curve) / 2.0;
  report.reach = best;
  report.witness_a = {cum[bi], v[bi], bi};
  report.witness_b = CurvePoint{cum[bj], v[bj], bj};
  return report;
}

ReachReport reach_bisection(const SampledCurve& curve, double r_lo, double r_hi, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::OutOfRange, "reach_bisection: tol must be positive");
  if (!(r_lo > 0.0 && r_lo < r_hi)) throw Error(ErrorKind::BadBracket, "reach_bisection: need 0 < r_lo < r_hi");
  if (!par_regular_check(curve, r_lo, true).ok) throw Error(ErrorKind::BadBracket, "reach_bisection: check fails at r_lo");
  if (par_regular_check(curve, r_hi, true).ok) throw Error(ErrorKind::BadBracket, "reach_bisection: check passes at r_hi");

  ReachReport report;
  report.method = ReachMethod::OsculatingBisection;
  report.resolution = curve.size();
  report.bracket_lo = r_lo;
  report.bracket_hi = r_hi;
  double lo = r_lo, hi = r_hi;
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (par_regular_check(curve, mid, true).ok) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double estimate = 0.5 * (lo + hi);
  report.reach = estimate;
  const OsculatingReport failing = par_regular_check(curve, hi);
  const OsculatingFailure& w = *failing.worst;
  report.witness_a = {w.s, curve.vertex(w.index), w.index};
  report.center = w.center;
  const double tau = osculating_tolerance(curve.max_spacing(), estimate, curve.total_length());
  if (estimate < 10.0 * tau) {
    report.below_resolution = true;
    report.reach = 0.0;
  }
  return report;
}

ReachReport reach_bisection(const SampledCurve& curve, double tol) {
  const double r_hi = diameter(curve);
  if (tol <= 0.0) tol = 1e-4 * r_hi;
  double r_lo = 0.5 * r_hi;
  const double floor = 1e-9 * r_hi;
  while (r_lo > floor && !par_regular_check(curve, r_lo, true).ok) r_lo *= 0.5;
  if (r_lo <= floor) {
    ReachReport report;
    report.method = ReachMethod::OsculatingBisection;
    report.resolution = curve.size();
    report.below_resolution = true;
    report.reach = 0.0;
    const OsculatingReport rep = par_regular_check(curve, r_lo);
    if (rep.worst) {
      report.witness_a = {rep.worst->s, curve.vertex(rep.worst->index), rep.worst->index};
      report.center = rep.worst->center;
    }
    return report;
  }
  return reach_bisection(curve, r_lo, std::min(2.0 * r_lo, r_hi), std::min(tol, 0.5 * r_lo));
}

}  // namespace curveturn
