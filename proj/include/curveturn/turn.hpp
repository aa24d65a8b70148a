#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "curveturn/curve.hpp"
#include "curveturn/generators.hpp"

namespace curveturn {

inline constexpr double kDefaultTurnTol = 1e-4;

/// Sum of the unsigned exterior angles at the interior vertices.
double polyline_turn(std::span<const Point2> vertices);

/// Cyclic sum of the unsigned exterior angles.
double polygon_turn(std::span<const Point2> vertices);

/// Exterior angle at every vertex; zero at the ends of an open curve.
std::vector<double> exterior_angles(const SampledCurve& curve);

/// Prefix sums of exterior angles for O(1) turns of vertex-aligned arcs.
class TurnIndex {
 public:
  explicit TurnIndex(const SampledCurve& curve);

  std::size_t size() const { return angles_.size(); }
  double angle(std::size_t i) const { return angles_[i]; }
  std::span<const double> angles() const { return angles_; }

  /// Turn of the arc from vertex i to vertex j along the orientation,
  /// endpoint angles excluded.  Open curves need i < j.
  double between(std::size_t i, std::size_t j) const {
    if (i < j) return prefix_[j] - prefix_[i + 1];
    return (prefix_.back() - prefix_[i + 1]) + prefix_[j];
  }

  /// Arc length from vertex i to vertex j along the orientation.
  double length_between(std::size_t i, std::size_t j) const {
    if (i < j) return cum_[j] - cum_[i];
    return (cum_.back() - cum_[i]) + cum_[j];
  }

  double total() const { return prefix_.back(); }

 private:
  std::vector<double> angles_;
  std::vector<double> prefix_;
  std::vector<double> cum_;
};

struct TurnReport {
  double value = 0.0;
  std::size_t refinement_levels = 0;
  bool converged = false;
  double last_increment = 0.0;
  std::vector<double> level_values;  // coarse to fine
  std::vector<std::size_t> level_vertices;
};

/// Inscribed turns of the stored polyline under dyadic refinement: every
/// stride-th vertex, with strides halving from the coarsest one keeping at
/// least `min_vertices` vertices down to 1.  At most `max_levels` levels,
/// the finest always included.
TurnReport dyadic_turn_levels(const SampledCurve& curve, std::size_t max_levels = 64,
                              std::size_t min_vertices = 3);

/// Certified lower bound of the turn from the stored polyline.  All dyadic
/// levels are evaluated (the full polyline is itself inscribed and dominates
/// every coarser level); `converged` reports last_increment < tol.
TurnReport curve_turn(const SampledCurve& curve, double tol = kDefaultTurnTol);

/// Refinement on the analytic generator: samples double from spec.samples
/// until the increment drops below tol or `max_samples` is exceeded.
TurnReport curve_turn(const CurveSpec& spec, double tol = kDefaultTurnTol,
                      std::size_t max_samples = std::size_t{1} << 16);

/// Inscribed-polyline turn of the sub-arc at stored resolution.
double arc_turn(const SampledCurve& curve, const ArcRange& range);

/// |k(a,b) - k(a,c) - k(c,b) - angle(c)| with c snapped to the nearest vertex
/// strictly inside the range.
double turn_additivity_check(const SampledCurve& curve, const ArcRange& range, double c);

/// Closed curves: the parameters follow the curve's cyclic order, in either
/// direction.  Open curves: strictly monotone parameters.  Throws
/// PointNotOnCurve when a position is farther than `on_curve_tol` from the curve.
bool is_chain(std::span<const CurvePoint> points, const SampledCurve& curve,
              double on_curve_tol = Tolerances{}.boundary);

struct AngularPoint {
  double s = 0.0;
  double exterior_angle = 0.0;
  std::size_t index = 0;
};

inline constexpr double kDefaultAngularThreshold = 0.1;

std::vector<AngularPoint> angular_points(const SampledCurve& curve, double threshold);

struct TurnProfileEntry {
  double s = 0.0;
  double cumulative = 0.0;
};

/// Cumulative inscribed turn from vertex 0.  Row i (vertex i) includes the
/// angles at vertices 1..i; the ring-closing angles (at the last vertex and
/// at vertex 0) only enter the extra final row at s = L, whose value is
/// polygon_turn.  Open curves have no extra row.
std::vector<TurnProfileEntry> turn_profile(const SampledCurve& curve);

/// CSV `s,kappa_cum`.
void write_turn_profile_csv(std::ostream& out, std::span<const TurnProfileEntry> profile);

}  // namespace curveturn
