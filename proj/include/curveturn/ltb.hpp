#pragma once

#include <cstddef>

#include "curveturn/curve.hpp"
#include "curveturn/turn.hpp"

namespace curveturn {

/// Tolerance for turn comparisons against pi/2 and theta.
inline constexpr double kDefaultLtbTol = 1e-3;

struct StraightestArcResult {
  ArcRange range;
  double turn = 0.0;
  double length = 0.0;
  double complement_turn = 0.0;
  bool ambiguous = false;  // both arcs turn at most pi/2 + tol
};

/// Arc between a and b turning at most pi/2 + tol.  Requires ||a - b|| < delta.
/// Throws OutOfRange when the points are too far apart, NoStraightArc when
/// both arcs turn more.
StraightestArcResult straightest_arc(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b,
                                     double delta, double tol = kDefaultLtbTol);

/// The arc with the smaller turn, ties broken by length.  No distance gate.
StraightestArcResult lesser_turn_arc(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b);

struct LtbReport {
  double theta = 0.0;
  double delta = 0.0;
  CurvePoint witness_a;
  CurvePoint witness_b;
  std::size_t pairs_scanned = 0;
  std::size_t violations = 0;
  bool capped = false;          // no violating pair, delta is the diameter
  double sampling_slack = 0.0;  // one sample spacing
};

/// Smallest chord between two vertices whose two arcs both turn more than theta.
LtbReport max_delta(const SampledCurve& curve, double theta);

struct LipschitzReport {
  double k = 0.0;
  bool infinite = false;
  ArcRange witness_range;
  double min_arc_length_used = 0.0;
  std::size_t angular_points = 0;
};

/// Largest turn-to-length ratio over vertex ranges of length at least min_len,
/// counting half of each end angle.  min_len <= 0 selects four sample
/// spacings.  Infinite when an exterior angle exceeds angular_threshold.
LipschitzReport lipschitz_constant(const SampledCurve& curve, double min_len = 0.0,
                                   double angular_threshold = kDefaultAngularThreshold);

/// True when the part of the polyline inside the open disk B(a, eps) has a
/// single component.
bool local_connectivity_check(const SampledCurve& curve, const CurvePoint& a, double eps);

/// Walks from a both ways while inside B(a, delta / 2); true when the distance
/// to a never decreases by more than 1e-9 L.
bool distance_monotonicity_check(const SampledCurve& curve, const CurvePoint& a, double delta);

}  // namespace curveturn
