#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "curveturn/curve.hpp"

namespace curveturn {

enum class Family { Circle, Ellipse, RegularNGon, RoundedPolygon, Bone, Polyline };

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

/// Declarative description of a generated curve.
///
/// Parameters by family (defaults in brackets):
///   Circle          r [1], cx [0], cy [0]
///   Ellipse         a [2], b [1]
///   RegularNGon     sides [4], circumradius [1], rotation [0]
///   RoundedPolygon  sides [4], circumradius [1], corner_radius [0.25], rotation [0]
///   Bone            r [1], delta [0.5]
///   Polyline        explicit `points`, `closed`
///
/// Analytic families are sampled at `samples` vertices equally spaced in arc
/// length, starting from a fixed anchor; doubling `samples` keeps every
/// previous vertex.  RegularNGon emits its corners plus
/// floor(samples / sides) - 1 evenly spaced points per edge.
struct CurveSpec {
  Family family = Family::Circle;
  std::map<std::string, double> params;
  std::vector<Point2> points;
  bool closed = true;
  std::size_t samples = 1024;

  double param(const std::string& name, double fallback) const;
};

/// Named fixture shorthands: "circle", "ellipse", "ngon", "square", "rounded",
/// "bone", "polyline".  "square" is the axis-aligned unit square centred at the origin.
CurveSpec spec_for(std::string_view name);

SampledCurve generate(const CurveSpec& spec);

/// Total length of the analytic curve described by `spec` (not the sampled polyline).
double analytic_length(const CurveSpec& spec);

/// Arc-length parameterized chain of straight segments and circular arcs.
/// Pieces must join end to end.
class PiecewisePath {
 public:
  explicit PiecewisePath(Point2 start);

  PiecewisePath& line_to(const Point2& p);
  /// Arc around `center`, sweeping `sweep` radians (positive = counter-clockwise)
  /// from the current point.
  PiecewisePath& arc(const Point2& center, double sweep);

  double length() const { return cum_.back(); }
  const Point2& current() const { return current_; }
  Point2 evaluate(double s) const;

  /// n points at s = k L / n (closed) or s = k L / (n - 1) (open).
  std::vector<Point2> sample(std::size_t n, bool closed) const;

 private:
  struct Line {
    Point2 a, b;
  };
  struct Arc {
    Point2 center;
    double radius, start_angle, sweep;
  };
  using Piece = std::variant<Line, Arc>;

  std::vector<Piece> pieces_;
  std::vector<double> cum_{0.0};
  Point2 current_;
};

}  // namespace curveturn
