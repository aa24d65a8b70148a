#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "curveturn/ltb.hpp"
#include "error_matchers.hpp"
#include "fixtures.hpp"

using namespace curveturn;

namespace {

CurvePoint at_vertex(const SampledCurve& c, std::size_t i) { return point_at(c, c.cum_length()[i]); }

// Exhaustive oracle: smallest vertex chord whose two arcs both turn more than
// theta, from its own angle sums.
double brute_max_delta(const SampledCurve& c, double theta) {
  const std::size_t n = c.size();
  std::vector<double> ang(n), pre(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = c.vertex((i + n - 1) % n);
    const Point2& q = c.vertex(i);
    const Point2& r = c.vertex((i + 1) % n);
    ang[i] = angle_between(q - p, r - q);
    pre[i + 1] = pre[i] + ang[i];
  }
  double best = diameter(c);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double inner = pre[j] - pre[i + 1];
      const double outer = pre[n] - inner - ang[i] - ang[j];
      if (inner > theta && outer > theta) best = std::min(best, distance(c.vertex(i), c.vertex(j)));
    }
  }
  return best;
}

}  // namespace

TEST(StraightestArc, CircleShortArc) {
  const auto c = fixtures::make("circle", 4096);
  const auto r = straightest_arc(c, point_at(c, 1.0), point_at(c, 1.3), 1.4);
  EXPECT_NEAR(r.turn, 0.3, 2e-3);
  EXPECT_NEAR(r.length, 0.3, 1e-6);
  EXPECT_FALSE(r.ambiguous);
}

TEST(StraightestArc, CircleCrossLaw) {
  std::mt19937_64 rng(21);
  const double radius = 1.5;
  const auto c = fixtures::make("circle", 4096, {{"r", radius}});
  std::uniform_real_distribution<double> u(0.0, c.total_length());
  int checked = 0;
  while (checked < 200) {
    const auto a = point_at(c, u(rng)), b = point_at(c, u(rng));
    const double chord = distance(a.position, b.position);
    if (chord >= radius * std::sqrt(2.0) || chord < 0.05) continue;
    ++checked;
    const auto s = straightest_arc(c, a, b, 2 * radius);
    // the inscribed arc drops up to one vertex angle h / r at its ends
    const double exact = 2 * std::asin(chord / (2 * radius));
    EXPECT_NEAR(s.turn, exact, 0.01 * exact + c.max_spacing() / radius);
  }
}

TEST(StraightestArc, NearAntipodalHasNoStraightArc) {
  const auto c = fixtures::make("circle", 4096);
  EXPECT_ERROR_KIND(straightest_arc(c, point_at(c, 0.0), point_at(c, kPi - 0.1), 2.0), ErrorKind::NoStraightArc);
  EXPECT_ERROR_KIND(straightest_arc(c, point_at(c, 0.0), point_at(c, 2.0), 1.0), ErrorKind::OutOfRange);
}

TEST(StraightestArc, SquareEdge) {
  const auto sq = generate(fixtures::family("square", 400));
  const auto r = straightest_arc(sq, point_at(sq, 0.1), point_at(sq, 0.7), 1.0);
  EXPECT_NEAR(r.turn, 0.0, 1e-12);
  EXPECT_NEAR(r.length, 0.6, 1e-12);
}

TEST(StraightestArc, UniqueBelowDelta) {
  std::mt19937_64 rng(22);
  const double tol = kDefaultLtbTol;
  for (const auto& name : {"ellipse", "rounded", "bone"}) {
    const auto c = fixtures::make(name, 1024);
    const auto ltb = max_delta(c, kPi / 2);
    std::uniform_int_distribution<std::size_t> u(0, c.size() - 1);
    for (int k = 0; k < 500; ++k) {
      const std::size_t i = u(rng), j = u(rng);
      if (i == j || distance(c.vertex(i), c.vertex(j)) >= ltb.delta) continue;
      const auto s = straightest_arc(c, at_vertex(c, i), at_vertex(c, j), ltb.delta);
      EXPECT_LE(s.turn, kPi / 2 + tol);
      EXPECT_TRUE(s.complement_turn > kPi / 2 - tol || s.ambiguous) << name;
    }
  }
}

TEST(MaxDelta, Circle) {
  const auto ltb = max_delta(fixtures::make("circle", 2048), kPi / 2);
  EXPECT_NEAR(ltb.delta, std::sqrt(2.0), 0.02 * std::sqrt(2.0));
  EXPECT_FALSE(ltb.capped);
  EXPECT_GT(ltb.violations, 0u);
  EXPECT_GT(ltb.sampling_slack, 0.0);
}

TEST(MaxDelta, SquareOppositeEdges) {
  const auto ltb = max_delta(generate(fixtures::family("square", 400)), kPi / 2);
  EXPECT_NEAR(ltb.delta, 1.0, 1e-12);
}

TEST(MaxDelta, BoneMatchesDenseOracle) {
  const auto ltb = max_delta(fixtures::make("bone", 512), kPi / 2);
  const double oracle = brute_max_delta(fixtures::make("bone", 2048), kPi / 2);
  EXPECT_NEAR(ltb.delta, oracle, 0.05 * oracle);
  EXPECT_NEAR(oracle, 0.5, 0.05 * 0.5);
}

TEST(MaxDelta, ConsistentOnRandomPairs) {
  std::mt19937_64 rng(23);
  for (const auto& name : {"ellipse", "bone"}) {
    const auto c = fixtures::make(name, 1024);
    const auto ltb = max_delta(c, kPi / 2);
    std::uniform_int_distribution<std::size_t> u(0, c.size() - 1);
    for (int k = 0; k < 10000; ++k) {
      const std::size_t i = u(rng), j = u(rng);
      if (i == j || distance(c.vertex(i), c.vertex(j)) >= ltb.delta) continue;
      EXPECT_LE(lesser_turn_arc(c, at_vertex(c, i), at_vertex(c, j)).turn, kPi / 2 + kDefaultLtbTol) << name;
    }
  }
}

TEST(MaxDelta, OpenCurveRejected) {
  const auto open = SampledCurve::make_open({{0, 0}, {1, 0}, {1, 1}});
  EXPECT_THROW(max_delta(open, kPi / 2), Error);
}

TEST(Lipschitz, Examples) {
  const auto c2 = lipschitz_constant(fixtures::make("circle", 2048, {{"r", 2.0}}));
  EXPECT_NEAR(c2.k, 0.5, 0.005);
  EXPECT_FALSE(c2.infinite);
  const auto sq = lipschitz_constant(generate(fixtures::family("square", 400)));
  EXPECT_TRUE(sq.infinite);
  EXPECT_EQ(sq.angular_points, 4u);
  EXPECT_NEAR(lipschitz_constant(fixtures::make("bone", 4096)).k, 1.0, 0.02);
  EXPECT_NEAR(lipschitz_constant(fixtures::make("ellipse", 4096)).k, 2.0, 0.04);
}

TEST(Lipschitz, SimilarityCovariance) {
  std::mt19937_64 rng(24);
  const auto c = fixtures::make("ellipse", 1024);
  const double k = lipschitz_constant(c).k;
  for (int rep = 0; rep < 10; ++rep) {
    const auto t = fixtures::random_similarity(rng);
    const double kt = lipschitz_constant(fixtures::transform(c, t)).k;
    EXPECT_NEAR(kt * t.scale / k, 1.0, 1e-6);
  }
}

TEST(Lipschitz, BoundsEveryScannedSubarc) {
  std::mt19937_64 rng(25);
  for (const auto& name : {"ellipse", "rounded", "bone"}) {
    const auto c = fixtures::make(name, 1024);
    const auto lip = lipschitz_constant(c);
    const TurnIndex idx(c);
    std::uniform_int_distribution<std::size_t> u(0, c.size() - 1);
    for (int k = 0; k < 2000; ++k) {
      const std::size_t i = u(rng), j = u(rng);
      if (i == j) continue;
      const double len = idx.length_between(i, j);
      if (len < lip.min_arc_length_used) continue;
      EXPECT_LE(idx.between(i, j), lip.k * len + kDefaultLtbTol) << name;
    }
  }
}

TEST(LocalConnectivity, Examples) {
  const auto c = fixtures::make("circle", 2048);
  EXPECT_TRUE(local_connectivity_check(c, point_at(c, 1.0), 0.5));
  const auto bone = fixtures::make("bone", 4096);
  const auto gap = point_at(bone, 0.0);
  EXPECT_NEAR(gap.position.y, 0.25, 1e-12);
  EXPECT_FALSE(local_connectivity_check(bone, gap, 0.6));
  EXPECT_TRUE(local_connectivity_check(bone, gap, 0.25));
}

TEST(LocalConnectivity, HairpinFails) {
  const auto hp = fixtures::hairpin(3.0, 0.1, 2048);
  EXPECT_FALSE(local_connectivity_check(hp, point_at(hp, 1.5), 0.5));
  EXPECT_TRUE(local_connectivity_check(hp, point_at(hp, 1.5), 0.05));
}

TEST(DistanceMonotonicity, Examples) {
  const auto c = fixtures::make("circle", 2048);
  for (double s : {0.0, 1.0, 4.0}) EXPECT_TRUE(distance_monotonicity_check(c, point_at(c, s), 1.0));
  const auto e = fixtures::make("ellipse", 2048);
  const double half_diam = diameter(e) / 2;
  for (int i = 0; i < 16; ++i) {
    EXPECT_TRUE(distance_monotonicity_check(e, point_at(e, e.total_length() * i / 16), half_diam));
  }
  const auto hp = fixtures::hairpin(3.0, 0.1, 2048);
  EXPECT_FALSE(distance_monotonicity_check(hp, point_at(hp, 2.9), 1.0));
}
