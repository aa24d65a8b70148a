#include "curveturn/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace curveturn {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Circle: return "circle";
    case Family::Ellipse: return "ellipse";
    case Family::RegularNGon: return "ngon";
    case Family::RoundedPolygon: return "rounded";
    case Family::Bone: return "bone";
    case Family::Polyline: return "polyline";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  if (name == "circle") return Family::Circle;
  if (name == "ellipse") return Family::Ellipse;
  if (name == "ngon" || name == "regular-ngon") return Family::RegularNGon;
  if (name == "rounded" || name == "rounded-polygon") return Family::RoundedPolygon;
  if (name == "bone") return Family::Bone;
  if (name == "polyline" || name == "square") return Family::Polyline;
  throw Error(ErrorKind::InvalidSpec, "unknown curve family: " + std::string(name));
}

double CurveSpec::param(const std::string& name, double fallback) const {
  const auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

CurveSpec spec_for(std::string_view name) {
  CurveSpec spec;
  if (name == "square") {
    spec.family = Family::Polyline;
    spec.points = {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
    spec.samples = 4;
    return spec;
  }
  spec.family = family_from_string(name);
  if (spec.family == Family::RegularNGon) spec.samples = 4;
  return spec;
}

// ---------------------------------------------------------------------------
// PiecewisePath

PiecewisePath::PiecewisePath(Point2 start) : current_(start) {}

PiecewisePath& PiecewisePath::line_to(const Point2& p) {
  const double len = distance(current_, p);
  if (!(len > 0.0)) throw Error(ErrorKind::InvalidSpec, "PiecewisePath: zero-length segment");
  pieces_.emplace_back(Line{current_, p});
  cum_.push_back(cum_.back() + len);
  current_ = p;
  return *this;
}

PiecewisePath& PiecewisePath::arc(const Point2& center, double sweep) {
  const Vector2 radial = current_ - center;
  const double radius = radial.norm();
  if (!(radius > 0.0) || sweep == 0.0) {
    throw Error(ErrorKind::InvalidSpec, "PiecewisePath: degenerate arc");
  }
  const double start = std::atan2(radial.dy, radial.dx);
  pieces_.emplace_back(Arc{center, radius, start, sweep});
  cum_.push_back(cum_.back() + radius * std::abs(sweep));
  const double end = start + sweep;
  current_ = {center.x + radius * std::cos(end), center.y + radius * std::sin(end)};
  return *this;
}

Point2 PiecewisePath::evaluate(double s) const {
  if (pieces_.empty()) return current_;
  s = std::clamp(s, 0.0, length());
  auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
  std::size_t k = it == cum_.begin() ? 0 : static_cast<std::size_t>(it - cum_.begin()) - 1;
  k = std::min(k, pieces_.size() - 1);
  const double local = s - cum_[k];
  return std::visit(
      [&](const auto& piece) -> Point2 {
        using T = std::decay_t<decltype(piece)>;
        if constexpr (std::is_same_v<T, Line>) {
          const double len = cum_[k + 1] - cum_[k];
          return lerp(piece.a, piece.b, std::min(local / len, 1.0));
        } else {
          const double angle = piece.start_angle + std::copysign(local / piece.radius, piece.sweep);
          return {piece.center.x + piece.radius * std::cos(angle),
                  piece.center.y + piece.radius * std::sin(angle)};
        }
      },
      pieces_[k]);
}

std::vector<Point2> PiecewisePath::sample(std::size_t n, bool closed) const {
  std::vector<Point2> pts;
  pts.reserve(n);
  const double total = length();
  const double denom = static_cast<double>(closed ? n : n - 1);
  for (std::size_t k = 0; k < n; ++k) pts.push_back(evaluate(total * static_cast<double>(k) / denom));
  return pts;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::InvalidSpec, what);
}

// Arc-length table for x = a cos t, y = b sin t.
class EllipseArcLength {
 public:
  EllipseArcLength(double a, double b, std::size_t intervals = 4096) : a_(a), b_(b) {
    step_ = 2.0 * kPi / static_cast<double>(intervals);
    cum_.resize(intervals + 1, 0.0);
    for (std::size_t i = 0; i < intervals; ++i) {
      const double t0 = step_ * static_cast<double>(i);
      cum_[i + 1] = cum_[i] + integrate(t0, t0 + step_);
    }
  }

  double length() const { return cum_.back(); }

  double parameter_at(double s) const {
    auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
    std::size_t i = it == cum_.begin() ? 0 : static_cast<std::size_t>(it - cum_.begin()) - 1;
    i = std::min(i, cum_.size() - 2);
    const double t0 = step_ * static_cast<double>(i);
    const double target = s - cum_[i];
    double t = t0 + target / speed(t0 + 0.5 * step_);
    for (int iter = 0; iter < 8; ++iter) {
      t -= (integrate(t0, t) - target) / speed(t);
      t = std::clamp(t, t0, t0 + step_);
    }
    return t;
  }

  Point2 point(double t) const { return {a_ * std::cos(t), b_ * std::sin(t)}; }

 private:
  double speed(double t) const {
    const double st = std::sin(t);
    const double ct = std::cos(t);
    return std::sqrt(a_ * a_ * st * st + b_ * b_ * ct * ct);
  }

  // Five-point Gauss-Legendre.
  double integrate(double lo, double hi) const {
    static constexpr std::array<double, 5> x{0.0, -0.5384693101056831, 0.5384693101056831,
                                             -0.9061798459386640, 0.9061798459386640};
    static constexpr std::array<double, 5> w{0.5688888888888889, 0.4786286704993665,
                                             0.4786286704993665, 0.2369268850561891,
                                             0.2369268850561891};
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double acc = 0.0;
    for (std::size_t k = 0; k < 5; ++k) acc += w[k] * speed(mid + half * x[k]);
    return acc * half;
  }

  double a_, b_, step_;
  std::vector<double> cum_;
};

PiecewisePath bone_path(double r, double delta) {
  const double y0 = r + 0.5 * delta;
  PiecewisePath path({0.0, 0.5 * delta});
  path.arc({0.0, y0}, -kPi / 2)
      .arc({-2.0 * r, y0}, kPi)
      .line_to({-3.0 * r, -y0})
      .arc({-2.0 * r, -y0}, kPi)
      .arc({0.0, -y0}, -kPi)
      .arc({2.0 * r, -y0}, kPi)
      .line_to({3.0 * r, y0})
      .arc({2.0 * r, y0}, kPi)
      .arc({0.0, y0}, -kPi / 2);
  return path;
}

PiecewisePath rounded_polygon_path(std::size_t sides, double circumradius, double corner_radius,
                                   double rotation) {
  const double half = kPi / static_cast<double>(sides);
  const double inradius = circumradius * std::cos(half);
  const double inner_circum = (inradius - corner_radius) / std::cos(half);
  auto corner = [&](std::size_t k) {
    const double th = rotation + 2.0 * half * static_cast<double>(k);
    return Point2{inner_circum * std::cos(th), inner_circum * std::sin(th)};
  };
  auto offset = [&](const Point2& c, double angle) {
    return Point2{c.x + corner_radius * std::cos(angle), c.y + corner_radius * std::sin(angle)};
  };
  const Point2 start = offset(corner(0), rotation - half);
  PiecewisePath path(start);
  for (std::size_t k = 0; k < sides; ++k) {
    path.arc(corner(k), 2.0 * half);
    const std::size_t next = (k + 1) % sides;
    const double th_next = rotation + 2.0 * half * static_cast<double>(next);
    path.line_to(next == 0 ? start : offset(corner(next), th_next - half));
  }
  return path;
}

// Corners plus evenly spaced points along each edge.
std::vector<Point2> subdivide_polygon(const std::vector<Point2>& corners, std::size_t samples,
                                      bool closed) {
  const std::size_t edges = closed ? corners.size() : corners.size() - 1;
  const std::size_t per_edge = std::max<std::size_t>(1, samples / corners.size());
  std::vector<Point2> pts;
  pts.reserve(edges * per_edge + 1);
  for (std::size_t e = 0; e < edges; ++e) {
    const Point2& a = corners[e];
    const Point2& b = corners[(e + 1) % corners.size()];
    for (std::size_t j = 0; j < per_edge; ++j) {
      pts.push_back(lerp(a, b, static_cast<double>(j) / static_cast<double>(per_edge)));
    }
  }
  if (!closed) pts.push_back(corners.back());
  return pts;
}

std::size_t sides_of(const CurveSpec& spec) {
  const double sides = spec.param("sides", 4);
  require(sides >= 3 && sides == std::floor(sides), "polygon needs an integer number of sides >= 3");
  return static_cast<std::size_t>(sides);
}

std::vector<Point2> ngon_corners(const CurveSpec& spec) {
  const std::size_t sides = sides_of(spec);
  const double radius = spec.param("circumradius", 1.0);
  const double rotation = spec.param("rotation", 0.0);
  require(radius > 0.0, "circumradius must be positive");
  std::vector<Point2> corners;
  for (std::size_t k = 0; k < sides; ++k) {
    const double th = rotation + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(sides);
    corners.emplace_back(radius * std::cos(th), radius * std::sin(th));
  }
  return corners;
}

}  // namespace

SampledCurve generate(const CurveSpec& spec) {
  require(spec.samples >= 3, "samples must be at least 3");
  const std::size_t n = spec.samples;
  std::vector<Point2> pts;
  bool closed = true;
  switch (spec.family) {
    case Family::Circle: {
      const double r = spec.param("r", 1.0);
      const double cx = spec.param("cx", 0.0);
      const double cy = spec.param("cy", 0.0);
      require(r > 0.0, "circle radius must be positive");
      pts.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        const double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        pts.emplace_back(cx + r * std::cos(th), cy + r * std::sin(th));
      }
      break;
    }
    case Family::Ellipse: {
      const double a = spec.param("a", 2.0);
      const double b = spec.param("b", 1.0);
      require(a > 0.0 && b > 0.0, "ellipse semi-axes must be positive");
      const EllipseArcLength table(a, b);
      pts.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        const double s = table.length() * static_cast<double>(k) / static_cast<double>(n);
        pts.push_back(table.point(table.parameter_at(s)));
      }
      break;
    }
    case Family::RegularNGon:
      pts = subdivide_polygon(ngon_corners(spec), n, true);
      break;
    case Family::RoundedPolygon: {
      const std::size_t sides = sides_of(spec);
      const double radius = spec.param("circumradius", 1.0);
      const double rho = spec.param("corner_radius", 0.25);
      require(radius > 0.0 && rho > 0.0, "rounded polygon radii must be positive");
      require(rho < radius * std::cos(kPi / static_cast<double>(sides)),
              "corner radius must be below the inradius");
      pts = rounded_polygon_path(sides, radius, rho, spec.param("rotation", 0.0)).sample(n, true);
      break;
    }
    case Family::Bone: {
      const double r = spec.param("r", 1.0);
      const double delta = spec.param("delta", 0.5);
      require(r > 0.0 && delta > 0.0, "bone needs r > 0 and delta > 0");
      pts = bone_path(r, delta).sample(n, true);
      break;
    }
    case Family::Polyline: {
      closed = spec.closed;
      require(spec.points.size() >= (closed ? 3u : 2u), "polyline needs more points");
      pts = spec.samples > spec.points.size() ? subdivide_polygon(spec.points, n, closed) : spec.points;
      break;
    }
  }
  try {
    return {std::move(pts), closed};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotSimple || e.kind() == ErrorKind::DuplicateVertex) {
      throw Error(ErrorKind::NotSimple, std::string("generate: ") + e.what());
    }
    throw;
  }
}

double analytic_length(const CurveSpec& spec) {
  switch (spec.family) {
    case Family::Circle: return 2.0 * kPi * spec.param("r", 1.0);
    case Family::Ellipse: return EllipseArcLength(spec.param("a", 2.0), spec.param("b", 1.0)).length();
    case Family::RegularNGon: {
      const double sides = static_cast<double>(sides_of(spec));
      return sides * 2.0 * spec.param("circumradius", 1.0) * std::sin(kPi / sides);
    }
    case Family::RoundedPolygon:
      return rounded_polygon_path(sides_of(spec), spec.param("circumradius", 1.0),
                                  spec.param("corner_radius", 0.25), spec.param("rotation", 0.0))
          .length();
    case Family::Bone:
      return bone_path(spec.param("r", 1.0), spec.param("delta", 0.5)).length();
    case Family::Polyline: {
      double len = 0.0;
      const std::size_t m = spec.points.size();
      const std::size_t edges = spec.closed ? m : m - 1;
      for (std::size_t e = 0; e < edges; ++e) len += distance(spec.points[e], spec.points[(e + 1) % m]);
      return len;
    }
  }
  return 0.0;
}

}  // namespace curveturn
