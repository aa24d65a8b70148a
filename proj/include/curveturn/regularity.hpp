#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "curveturn/curve.hpp"

namespace curveturn {

/// Unit normal at vertex i pointing into the bounded region.  Closed curves only.
Vector2 normal_at(const SampledCurve& curve, std::size_t i);

enum class DiskSide { Inside, Outside };

std::string_view to_string(DiskSide side);

struct OsculatingFailure {
  double s = 0.0;
  DiskSide side = DiskSide::Inside;
  double clearance = 0.0;  // distance from the disk centre to the polyline
  std::size_t index = 0;
  Point2 center;
};

struct OsculatingReport {
  double r = 0.0;
  bool ok = true;
  std::vector<OsculatingFailure> failures;
  double tau_osc = 0.0;  // largest clearance tolerance used
  std::optional<OsculatingFailure> worst;
};

/// Clearance tolerance at a vertex: a chord of length h sits within h^2 / (8r)
/// of a circle of radius r, so h^2 / r absorbs sampling without hiding
/// geometric failures that grow with arc length.
double osculating_tolerance(double spacing, double r, double total_length);

/// Places disks of radius r on both sides of every vertex along the normal and
/// checks their clearance from the polyline and the side of their centres.
/// With `first_failure_only` the scan stops at the first failing disk.
OsculatingReport par_regular_check(const SampledCurve& curve, double r, bool first_failure_only = false);

/// CSV `s,side,clearance`.
void write_failures_csv(std::ostream& out, std::span<const OsculatingFailure> failures);

enum class ReachMethod { PairwiseFederer, OsculatingBisection };

std::string_view to_string(ReachMethod m);

struct ReachReport {
  double reach = 0.0;
  ReachMethod method = ReachMethod::PairwiseFederer;
  CurvePoint witness_a;
  std::optional<CurvePoint> witness_b;  // pairwise
  std::optional<Point2> center;         // bisection
  std::size_t resolution = 0;
  bool below_resolution = false;  // bisection estimate under 10 tau_osc, reported as 0
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  std::size_t pairs_skipped = 0;
};

/// Near-tangential pairs with normal offset below this fraction of the length
/// are skipped by the pairwise estimator.
inline constexpr double kReachTangentialFraction = 1e-6;

/// min over ordered vertex pairs of |b - a|^2 / (2 |normal component of b - a|).
/// Throws CornerPresent when the curve has angular points above 0.1 rad.
ReachReport reach_pairwise(const SampledCurve& curve);

/// Bisection on r between a passing and a failing radius of par_regular_check.
/// Throws BadBracket when the bracket is not passing / failing.
ReachReport reach_bisection(const SampledCurve& curve, double r_lo, double r_hi, double tol);

/// Bracket chosen automatically: r_hi = diameter, r_lo found by halving.
/// tol <= 0 selects 1e-4 of the diameter.
ReachReport reach_bisection(const SampledCurve& curve, double tol = 0.0);

}  // namespace curveturn
