#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "curveturn/regularity.hpp"
#include "error_matchers.hpp"
#include "fixtures.hpp"

using namespace curveturn;

TEST(Normal, CircleIsInwardRadial) {
  const auto c = fixtures::make("circle", 1024);
  const Vector2 n = normal_at(c, 0);
  EXPECT_NEAR(c.vertex(0).x, 1.0, 1e-12);
  EXPECT_NEAR(n.dx, -1.0, 1e-3);
  EXPECT_NEAR(n.dy, 0.0, 1e-3);
}

TEST(Normal, SquareEdgeMidpoint) {
  const auto sq = generate(fixtures::family("square", 400));
  const auto mid = point_at(sq, 0.5);
  const Vector2 n = normal_at(sq, 50);
  ASSERT_NEAR(distance(sq.vertex(50), mid.position), 0.0, 1e-12);
  EXPECT_NEAR(n.dx, 0.0, 1e-12);
  EXPECT_NEAR(n.dy, 1.0, 1e-12);
}

TEST(Normal, EllipseMatchesAnalytic) {
  const double a = 2.0, b = 1.0;
  const auto e = fixtures::make("ellipse", 2048, {{"a", a}, {"b", b}});
  for (std::size_t i = 0; i < e.size(); i += 97) {
    const Point2 p = e.vertex(i);
    const Vector2 exact = Vector2(-p.x / (a * a), -p.y / (b * b)).normalized();
    const Vector2 n = normal_at(e, i);
    EXPECT_NEAR(n.dx, exact.dx, 1e-3) << i;
    EXPECT_NEAR(n.dy, exact.dy, 1e-3) << i;
  }
}

TEST(Normal, ReversedOrientationStillInward) {
  const auto c = fixtures::make("circle", 256);
  std::vector<Point2> rev(c.vertices().rbegin(), c.vertices().rend());
  const auto r = SampledCurve::make_closed(rev);
  for (std::size_t i = 0; i < r.size(); i += 31) {
    const Vector2 n = normal_at(r, i);
    EXPECT_LT(dot(n, r.vertex(i) - Point2{0, 0}), 0.0);
  }
}

TEST(ParRegular, Circle) {
  const auto c = fixtures::make("circle", 1024);
  const auto ok = par_regular_check(c, 0.9);
  EXPECT_TRUE(ok.ok);
  EXPECT_TRUE(ok.failures.empty());
  EXPECT_GT(ok.tau_osc, 0.0);
  const auto bad = par_regular_check(c, 1.1);
  EXPECT_FALSE(bad.ok);
  std::size_t inside = 0;
  for (const auto& f : bad.failures) inside += f.side == DiskSide::Inside;
  EXPECT_EQ(inside, c.size());
}

TEST(ParRegular, BoneFailsAtTheGap) {
  const auto bone = fixtures::make("bone", 4096);
  EXPECT_TRUE(par_regular_check(bone, 0.2).ok);
  const auto bad = par_regular_check(bone, 0.3);
  ASSERT_FALSE(bad.ok);
  for (const auto& f : bad.failures) {
    const Point2 p = point_at(bone, f.s).position;
    EXPECT_LT(std::abs(p.x), 0.5) << f.s;
    EXPECT_LT(std::abs(p.y), 0.5) << f.s;
  }
}

TEST(ParRegular, SquareFailsEverywhereAboveTolerance) {
  const auto sq = generate(fixtures::family("square", 400));
  for (double r : {0.5, 0.2, 0.1, 0.05}) EXPECT_FALSE(par_regular_check(sq, r).ok) << r;
}

TEST(ParRegular, MonotoneInRadius) {
  for (const auto& name : {"circle", "ellipse", "rounded", "bone"}) {
    const auto c = fixtures::make(name, 1024);
    bool failed = false;
    for (int k = 1; k <= 10; ++k) {
      const bool ok = par_regular_check(c, 0.15 * k).ok;
      if (failed) EXPECT_FALSE(ok) << name << " r=" << 0.15 * k;
      failed = failed || !ok;
    }
  }
}

TEST(ParRegular, FailuresEmptyExactlyWhenOk) {
  const auto e = fixtures::make("ellipse", 1024);
  for (double r : {0.3, 0.49, 0.6, 1.0}) {
    const auto rep = par_regular_check(e, r);
    EXPECT_EQ(rep.ok, rep.failures.empty());
    EXPECT_EQ(rep.ok, !rep.worst.has_value());
  }
}

TEST(ParRegular, FailuresCsv) {
  const auto rep = par_regular_check(fixtures::make("circle", 64), 1.5);
  std::ostringstream out;
  write_failures_csv(out, rep.failures);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "s,side,clearance");
  EXPECT_NE(text.find(",inside,"), std::string::npos);
}

TEST(ReachPairwise, Examples) {
  const auto c = reach_pairwise(fixtures::make("circle", 2048, {{"r", 2.0}}));
  EXPECT_NEAR(c.reach, 2.0, 0.02);
  EXPECT_EQ(c.method, ReachMethod::PairwiseFederer);
  EXPECT_TRUE(c.witness_b.has_value());
  EXPECT_NEAR(reach_pairwise(fixtures::make("ellipse", 2048)).reach, 0.5, 0.01);
  EXPECT_NEAR(reach_pairwise(fixtures::make("bone", 2048)).reach, 0.25, 0.0125);
  EXPECT_ERROR_KIND(reach_pairwise(generate(fixtures::family("square", 400))), ErrorKind::CornerPresent);
}

TEST(ReachBisection, Examples) {
  const auto circle = fixtures::make("circle", 2048);
  const auto r = reach_bisection(circle, 0.5, 1.5, 1e-3);
  EXPECT_NEAR(r.reach, 1.0, 2e-3);
  EXPECT_EQ(r.method, ReachMethod::OsculatingBisection);
  EXPECT_TRUE(r.center.has_value());
  EXPECT_ERROR_KIND(reach_bisection(circle, 1.2, 1.5, 1e-3), ErrorKind::BadBracket);
  EXPECT_ERROR_KIND(reach_bisection(circle, 0.2, 0.5, 1e-3), ErrorKind::BadBracket);

  EXPECT_NEAR(reach_bisection(fixtures::make("bone", 2048)).reach, 0.25, 0.005);

  const auto sq = reach_bisection(generate(fixtures::family("square", 400)));
  EXPECT_EQ(sq.reach, 0.0);
  EXPECT_TRUE(sq.below_resolution);
}

TEST(Reach, BoundedByDiameter) {
  for (const auto& name : {"circle", "ellipse", "rounded", "bone"}) {
    const auto c = fixtures::make(name, 1024);
    EXPECT_LE(reach_pairwise(c).reach, diameter(c)) << name;
    EXPECT_LE(reach_bisection(c).reach, diameter(c)) << name;
  }
}

TEST(Reach, SimilarityCovariance) {
  std::mt19937_64 rng(31);
  const auto c = fixtures::make("ellipse", 1024);
  const double p = reach_pairwise(c).reach, b = reach_bisection(c).reach;
  for (int rep = 0; rep < 5; ++rep) {
    const auto t = fixtures::random_similarity(rng);
    const auto tc = fixtures::transform(c, t);
    EXPECT_NEAR(reach_pairwise(tc).reach / (t.scale * p), 1.0, 1e-6);
    EXPECT_NEAR(reach_bisection(tc).reach / (t.scale * b), 1.0, 1e-6);
  }
}
