#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curveturn/curve.hpp"
#include "curveturn/ltb.hpp"
#include "curveturn/regularity.hpp"

namespace curveturn {

inline constexpr double kDefaultVerifyTol = 1e-3;

enum class VerificationStatus { Holds, Fails, HypothesisFailed, NotApplicable };

std::string_view to_string(VerificationStatus s);

/// Ordered name/value list; keeps report output stable.
using Fields = std::vector<std::pair<std::string, double>>;

struct VerificationReport {
  std::string claim;
  VerificationStatus status = VerificationStatus::Holds;
  double measured_slack = 0.0;
  double tolerance = 0.0;
  Fields witness;
  Fields config;
  std::vector<std::string> notes;

  bool holds() const { return status == VerificationStatus::Holds; }
};

/// Radial projection of an inner convex polyline onto an arc.
struct ProjectionChain {
  std::vector<Point2> source_vertices;
  std::vector<CurvePoint> projected;  // a, q_1 .. q_m, b on the arc
  Point2 center;
  bool is_chain = false;
};

/// `arc` is an open curve from a to b; `inner` runs from a to b and closes
/// into a convex ring with [b, a]; c lies strictly inside (a, b).  Each
/// interior vertex p_i is sent to the first hit of the ray c -> p_i on the arc.
/// Throws NotConvexInner, NoIntersection, GeometryPreconditionFailed.
ProjectionChain project_chain(const SampledCurve& arc, std::span<const Point2> inner, const Point2& c);

/// Turn lost to sampling near arc endpoints: 1.5 times the exterior angles of
/// the vertices bounding the end edges, ignoring angular points.
double endpoint_turn_allowance(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b);

/// Turn of the lesser-turn arc between a and b against the minor circle arc
/// of radius r_circ through a and b bulging to the same side.  Throws
/// GeometryPreconditionFailed when the chord exceeds 2 r_circ, when the arc
/// and its chord do not bound a simple region, or when the circle arc leaves it.
VerificationReport verify_turn_containment(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b,
                                           double r_circ, double tol = kDefaultVerifyTol);

/// Chord of an open arc against the chord of the circle arc of radius r_ref
/// with the same length.  Throws LipschitzHypothesisFailed when the arc turns
/// faster than 1/r_ref, HypothesisFailed when it is longer than pi r_ref.
VerificationReport verify_schur(const SampledCurve& arc, double r_ref, double tol = kDefaultVerifyTol,
                                double min_len = 0.0);

/// 2 r arcsin(|b - a| / 2r) minus the length of the lesser-turn arc.
double length_bound_slack(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b, double r);

/// Arc length bound over all vertex pairs closer than 2r that have an arc
/// turning at most pi/2.  Throws HypothesisFailed when the Lipschitz constant
/// exceeds 1/r; the LTB scale is measured and reported, not enforced.
VerificationReport verify_length_bound(const SampledCurve& curve, double r, double tol = kDefaultVerifyTol);

/// par(r)-regular => (theta, 2r sin(theta/2))-LTB with Lipschitz constant 1/r.
/// Throws HypothesisFailed when par_regular_check(r) fails.
VerificationReport verify_forward(const SampledCurve& curve, double r, double theta = kPi / 2.0,
                                  double tol = kDefaultVerifyTol);

/// reach >= min(delta / 2, 1 / k) for the measured delta (theta = pi/2) and k.
VerificationReport verify_converse(const SampledCurve& curve);

/// The two chord inequalities used to bound the reach, on one pair.  The
/// empty-disk centre comes from the bisection reach witness.
VerificationReport verify_eq_bounds(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b, double r1,
                                    double tol = kDefaultVerifyTol);

/// forward, converse, length-bound, schur and turn-containment with
/// parameters derived from the curve's own estimators.  Hypothesis errors
/// become HypothesisFailed reports.
std::vector<VerificationReport> run_all(const SampledCurve& curve, double tol = kDefaultVerifyTol);

/// Single claim by CLI name: forward, converse, length-bound, schur,
/// turn-containment.
VerificationReport run_claim(const SampledCurve& curve, std::string_view claim, double tol = kDefaultVerifyTol);

/// 0 all hold, 1 something fails, 2 otherwise (hypothesis failed / not applicable).
int exit_code_for(std::span<const VerificationReport> reports);

std::string reports_to_json(std::span<const VerificationReport> reports);
/// One row per claim: claim,status,holds,slack,tolerance.
std::string reports_to_csv(std::span<const VerificationReport> reports);

struct SvgMark {
  Point2 at;
  double radius = 0.0;  // 0 draws a dot
  std::string label;
};

/// Plain SVG: the curve as a path, circles and labelled dots.
void write_svg(std::ostream& out, const SampledCurve& curve, std::span<const SvgMark> marks);

}  // namespace curveturn
