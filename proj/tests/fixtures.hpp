#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "curveturn/curve.hpp"
#include "curveturn/curve_io.hpp"
#include "curveturn/generators.hpp"

namespace fixtures {

using curveturn::Point2;
using curveturn::SampledCurve;

inline constexpr double kTwoPi = 2.0 * curveturn::kPi;

inline std::filesystem::path fixture_dir() { return CURVETURN_FIXTURE_DIR; }

inline std::vector<std::string> shipped_names() { return {"circle", "ellipse", "square", "rounded", "bone"}; }

inline curveturn::CurveSpec shipped(const std::string& name, std::size_t samples = 0) {
  auto spec = curveturn::load_curve_spec((fixture_dir() / (name + ".json")).string());
  if (samples) spec.samples = samples;
  return spec;
}

inline curveturn::CurveSpec family(const std::string& name, std::size_t samples,
                                   std::initializer_list<std::pair<const std::string, double>> params = {}) {
  auto spec = curveturn::spec_for(name);
  spec.samples = samples;
  for (const auto& [k, v] : params) spec.params[k] = v;
  return spec;
}

inline SampledCurve make(const std::string& name, std::size_t samples,
                         std::initializer_list<std::pair<const std::string, double>> params = {}) {
  return curveturn::generate(family(name, samples, params));
}

inline std::vector<double> sorted_angles(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::vector<double> t(n);
  for (auto& x : t) x = u(rng);
  std::sort(t.begin(), t.end());
  return t;
}

// Points on a random rotated ellipse: always strictly convex.
inline std::vector<Point2> random_convex_polygon(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> axis(0.5, 2.0), rot(0.0, kTwoPi), shift(-3.0, 3.0);
  const double a = axis(rng), b = axis(rng), phi = rot(rng), cx = shift(rng), cy = shift(rng);
  std::vector<Point2> pts;
  for (double t : sorted_angles(rng, n)) {
    const double x = a * std::cos(t), y = b * std::sin(t);
    pts.push_back({cx + x * std::cos(phi) - y * std::sin(phi), cy + x * std::sin(phi) + y * std::cos(phi)});
  }
  return pts;
}

// Star polygon with alternating outer and inner radii: simple, never convex.
inline std::vector<Point2> random_star_polygon(std::mt19937_64& rng, std::size_t spikes) {
  std::uniform_real_distribution<double> outer(0.9, 1.5), inner(0.2, 0.6), jitter(-0.3, 0.3);
  std::vector<Point2> pts;
  const std::size_t n = 2 * spikes;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = (i + 0.5 + jitter(rng)) * kTwoPi / static_cast<double>(n);
    const double r = i % 2 == 0 ? outer(rng) : inner(rng);
    pts.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return pts;
}

// Radial curve r(t) = 1 + sum a_k cos(k t + p_k) with sum |a_k| <= 0.45.
struct SmoothStar {
  std::vector<double> amp, phase;

  double radius(double t) const {
    double r = 1.0;
    for (std::size_t k = 0; k < amp.size(); ++k) r += amp[k] * std::cos((k + 2) * t + phase[k]);
    return r;
  }
  Point2 at(double t) const { return {radius(t) * std::cos(t), radius(t) * std::sin(t)}; }
};

inline SmoothStar random_smooth_star(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(0.0, 0.1), phase(0.0, kTwoPi);
  SmoothStar s;
  for (int k = 0; k < 4; ++k) {
    s.amp.push_back(amp(rng));
    s.phase.push_back(phase(rng));
  }
  return s;
}

inline SampledCurve sample(const SmoothStar& s, std::size_t n) {
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(s.at(kTwoPi * static_cast<double>(i) / static_cast<double>(n)));
  return SampledCurve::make_closed(std::move(pts));
}

// Thin stadium: two parallel walls `width` apart joined by half-circles.
inline SampledCurve hairpin(double length, double width, std::size_t n) {
  const double h = width / 2.0;
  curveturn::PiecewisePath p({0.0, 0.0});
  p.line_to({length, 0.0}).arc({length, h}, curveturn::kPi).line_to({0.0, width}).arc({0.0, h}, curveturn::kPi);
  return SampledCurve::make_closed(p.sample(n, true));
}

struct Similarity {
  double angle = 0.0, scale = 1.0, dx = 0.0, dy = 0.0;

  Point2 apply(const Point2& p) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {scale * (c * p.x - s * p.y) + dx, scale * (s * p.x + c * p.y) + dy};
  }
};

inline Similarity random_similarity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0.0, kTwoPi), sc(0.3, 3.0), sh(-5.0, 5.0);
  return {ang(rng), sc(rng), sh(rng), sh(rng)};
}

inline SampledCurve transform(const SampledCurve& c, const Similarity& t) {
  std::vector<Point2> pts;
  for (const auto& p : c.vertices()) pts.push_back(t.apply(p));
  return {std::move(pts), c.closed()};
}

}  // namespace fixtures
