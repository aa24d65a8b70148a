#include "curveturn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "curveturn/curve_io.hpp"
#include "curveturn/turn.hpp"

namespace curveturn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

VerificationReport make_report(std::string claim, const SampledCurve& curve, double tol) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.config = {{"resolution", static_cast<double>(curve.size())}, {"tol", tol}};
  return r;
}

void finish(VerificationReport& r) {
  r.status = r.measured_slack >= -r.tolerance ? VerificationStatus::Holds : VerificationStatus::Fails;
}

VerificationReport hypothesis_failed(std::string claim, const SampledCurve& curve, double tol, std::string why) {
  VerificationReport r = make_report(std::move(claim), curve, tol);
  r.status = VerificationStatus::HypothesisFailed;
  r.notes.push_back(std::move(why));
  return r;
}

bool is_hypothesis_error(ErrorKind k) {
  return k == ErrorKind::HypothesisFailed || k == ErrorKind::LipschitzHypothesisFailed ||
         k == ErrorKind::GeometryPreconditionFailed;
}

CurvePoint locate(const SampledCurve& curve, const CurvePoint& p) { return point_at(curve, p.s); }

// Signed minor sweep from u to v around the origin, |sweep| <= pi.
double signed_angle(const Vector2& u, const Vector2& v) { return std::atan2(cross(u, v), dot(u, v)); }

}  // namespace

std::string_view to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::Holds: return "holds";
    case VerificationStatus::Fails: return "fails";
    case VerificationStatus::HypothesisFailed: return "hypothesis_failed";
    case VerificationStatus::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

ProjectionChain project_chain(const SampledCurve& arc, std::span<const Point2> inner, const Point2& c) {
  if (arc.closed()) throw Error(ErrorKind::GeometryPreconditionFailed, "project_chain: arc must be open");
  if (inner.size() < 2) throw Error(ErrorKind::GeometryPreconditionFailed, "project_chain: inner polyline too short");
  const Point2& a = arc.vertex(0);
  const Point2& b = arc.vertex(arc.size() - 1);
  const double tol = 1e-9 * std::max(arc.total_length(), 1.0);
  if (distance(inner.front(), a) > tol || distance(inner.back(), b) > tol) {
    throw Error(ErrorKind::GeometryPreconditionFailed, "project_chain: inner polyline must run from a to b");
  }
  if (inner.size() >= 3 && !is_convex_ring(inner)) {
    throw Error(ErrorKind::NotConvexInner, "project_chain: inner polyline and [b, a] are not convex");
  }
  if (point_segment_distance(c, a, b) > tol || distance(c, a) <= tol || distance(c, b) <= tol) {
    throw Error(ErrorKind::GeometryPreconditionFailed, "project_chain: c must lie strictly inside (a, b)");
  }

  ProjectionChain out;
  out.source_vertices.assign(inner.begin(), inner.end());
  out.center = c;
  out.projected.push_back({0.0, a, 0});
  for (std::size_t i = 1; i + 1 < inner.size(); ++i) {
    const Vector2 dir = inner[i] - c;
    if (dir.is_zero()) throw Error(ErrorKind::GeometryPreconditionFailed, "project_chain: vertex coincides with c");
    const auto hit = arc.index().first_ray_hit(c, dir);
    if (!hit) throw Error(ErrorKind::NoIntersection, "project_chain: ray misses the arc");
    const double s = arc.cum_length()[hit->segment] + hit->u * arc.edge_length(hit->segment);
    out.projected.push_back({s, hit->point, hit->segment});
  }
  out.projected.push_back({arc.total_length(), b, arc.edge_count() - 1});
  out.is_chain = is_chain(out.projected, arc, tol);
  return out;
}

double endpoint_turn_allowance(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b) {
  const TurnIndex turns(curve);
  const std::size_t n = curve.size();
  auto local = [&](const CurvePoint& p) {
    const std::size_t e = point_at(curve, p.s).index;
    double best = 0.0;
    for (std::size_t v : {e, (e + 1) % n}) {
      const double ang = turns.angle(v);
      if (ang <= kDefaultAngularThreshold) best = std::max(best, ang);
    }
    return best;
  };
  // The end angles, plus half an angle per end for the circle arc overshoot
  // admitted by the h^2 / r containment tolerance.
  return 1.5 * (local(a) + local(b));
}

VerificationReport verify_turn_containment(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b,
                                           double r_circ, double tol) {
  if (!(r_circ > 0.0) || !std::isfinite(r_circ)) {
    throw Error(ErrorKind::InvalidRadius, "verify_turn_containment: radius must be positive");
  }
  const double chord = distance(a.position, b.position);
  if (!(chord > 0.0)) throw Error(ErrorKind::DegenerateRange, "verify_turn_containment: a and b coincide");
  if (chord > 2.0 * r_circ * (1.0 + 1e-9)) {
    throw Error(ErrorKind::GeometryPreconditionFailed, "verify_turn_containment: chord longer than the circle diameter");
  }
  const ArcRange range = curve.closed() ? lesser_turn_arc(curve, a, b).range
                                        : ArcRange{std::min(a.s, b.s), std::max(a.s, b.s)};
  const SampledCurve arc = subarc(curve, range);
  const double arc_turn_value = polyline_turn(arc.vertices());
  const Point2& p = arc.vertex(0);
  const Point2& q = arc.vertex(arc.size() - 1);
  const Vector2 u = q - p;

  double far = 0.0;
  for (const Point2& v : arc.vertices()) {
    const double c = cross(u, v - p);
    if (std::abs(c) > std::abs(far)) far = c;
  }
  if (std::abs(far) <= 1e-12 * u.norm2()) {
    throw Error(ErrorKind::GeometryPreconditionFailed, "verify_turn_containment: arc lies on its chord");
  }
  const double side = far > 0.0 ? 1.0 : -1.0;

  std::optional<SampledCurve> region;
  try {
    region.emplace(std::vector<Point2>(arc.vertices().begin(), arc.vertices().end()), true);
  } catch (const Error&) {
    throw Error(ErrorKind::GeometryPreconditionFailed, "verify_turn_containment: arc and chord do not bound a simple region");
  }

  // Minor arc of radius r_circ through p and q with its bulge on `side`.
  const double half = 0.5 * chord;
  const double h = std::sqrt(std::max(0.0, r_circ * r_circ - half * half));
  const Vector2 nrm = u.normalized().perp();
  const Point2 mid = lerp(p, q, 0.5);
  const Point2 o = mid + nrm * (-side * h);
  const Vector2 op = p - o;
  double sweep = signed_angle(op, q - o);
  auto at = [&](double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return o + Vector2{op.dx * c - op.dy * s, op.dx * s + op.dy * c};
  };
  if (cross(u, at(0.5 * sweep) - p) * side < 0.0) sweep = -sweep;

  const double band = 1e-9 * curve.total_length();
  // Chords of a radius-r_circ arc sit within h^2 / (8 r_circ) of it.
  const double reach_slack = osculating_tolerance(arc.max_spacing(), r_circ, curve.total_length());
  constexpr int kSamples = 512;
  for (int k = 1; k < kSamples; ++k) {
    const Point2 x = at(sweep * k / kSamples);
    if (region->index().classify(x, band) != Containment::Outside) continue;
    if (distance_to_curve(arc, x) <= reach_slack) continue;
    throw Error(ErrorKind::GeometryPreconditionFailed, "verify_turn_containment: circle arc leaves the region");
  }

  const double inner_turn = 2.0 * std::asin(std::min(1.0, chord / (2.0 * r_circ)));
  const double allowance = endpoint_turn_allowance(curve, a, b);
  VerificationReport r = make_report("turn-containment", curve, tol);
  r.measured_slack = arc_turn_value - inner_turn;
  r.tolerance = tol + allowance;
  r.witness = {{"a_s", a.s}, {"b_s", b.s}, {"chord", chord}, {"arc_turn", arc_turn_value},
               {"circle_arc_turn", inner_turn}, {"arc_start", range.start}, {"arc_end", range.end}};
  r.config.push_back({"r_circ", r_circ});
  r.config.push_back({"endpoint_allowance", allowance});
  finish(r);
  return r;
}

VerificationReport verify_schur(const SampledCurve& arc, double r_ref, double tol, double min_len) {
  if (arc.closed()) throw Error(ErrorKind::OutOfRange, "verify_schur: arc must be open");
  if (!(r_ref > 0.0) || !std::isfinite(r_ref)) throw Error(ErrorKind::InvalidRadius, "verify_schur: r_ref must be positive");
  const LipschitzReport lip = lipschitz_constant(arc, min_len);
  if (lip.infinite || lip.k > 1.0 / r_ref + tol) {
    throw Error(ErrorKind::LipschitzHypothesisFailed, "verify_schur: arc turns faster than 1/r_ref");
  }
  const double length = arc.total_length();
  if (length > kPi * r_ref * (1.0 + 1e-9)) {
    throw Error(ErrorKind::HypothesisFailed, "verify_schur: arc longer than pi r_ref");
  }
  const double chord = distance(arc.vertex(0), arc.vertex(arc.size() - 1));
  const double reference = 2.0 * r_ref * std::sin(length / (2.0 * r_ref));
  VerificationReport r = make_report("schur", arc, tol);
  r.measured_slack = chord - reference;
  r.tolerance = tol;
  r.witness = {{"length", length}, {"chord", chord}, {"reference_chord", reference}, {"k", lip.k}};
  r.config.push_back({"r_ref", r_ref});
  r.config.push_back({"min_len", lip.min_arc_length_used});
  finish(r);
  return r;
}

double length_bound_slack(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b, double r) {
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidRadius, "length_bound_slack: r must be positive");
  const double chord = distance(a.position, b.position);
  if (chord > 2.0 * r) throw Error(ErrorKind::OutOfRange, "length_bound_slack: chord longer than 2r");
  const StraightestArcResult arc = lesser_turn_arc(curve, a, b);
  return 2.0 * r * std::asin(chord / (2.0 * r)) - arc.length;
}

VerificationReport verify_length_bound(const SampledCurve& curve, double r, double tol) {
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidRadius, "verify_length_bound: r must be positive");
  const LipschitzReport lip = lipschitz_constant(curve);
  if (lip.infinite || lip.k > 1.0 / r + tol) {
    throw Error(ErrorKind::HypothesisFailed, "verify_length_bound: Lipschitz constant exceeds 1/r");
  }
  VerificationReport rep = make_report("length-bound", curve, tol);
  rep.config.push_back({"r", r});
  rep.config.push_back({"k", lip.k});
  if (curve.closed()) {
    const LtbReport ltb = max_delta(curve, kPi / 2.0);
    const bool ltb_ok = ltb.delta + ltb.sampling_slack >= 2.0 * r;
    rep.config.push_back({"delta", ltb.delta});
    rep.config.push_back({"ltb_hypothesis", ltb_ok ? 1.0 : 0.0});
    if (!ltb_ok) rep.notes.push_back("measured delta below 2r; pairs restricted to those with an arc of turn <= pi/2");
  }

  const TurnIndex turns(curve);
  const auto v = curve.vertices();
  const std::size_t n = v.size();
  const double limit = kPi / 2.0 + tol;
  const double two_r = 2.0 * r;
  double worst = kInf;
  std::size_t wi = 0, wj = 0, checked = 0, skipped = 0;
  double worst_len = 0.0, worst_chord = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double chord = distance(v[i], v[j]);
      if (!(chord < two_r)) continue;
      double len = kInf;
      if (turns.between(i, j) <= limit) len = turns.length_between(i, j);
      if (curve.closed() && turns.between(j, i) <= limit) len = std::min(len, turns.length_between(j, i));
      if (!std::isfinite(len)) {
        ++skipped;
        continue;
      }
      ++checked;
      const double slack = two_r * std::asin(chord / two_r) - len;
      if (slack < worst) {
        worst = slack;
        wi = i;
        wj = j;
        worst_len = len;
        worst_chord = chord;
      }
    }
  }
  const auto cum = curve.cum_length();
  rep.config.push_back({"pairs_checked", static_cast<double>(checked)});
  rep.config.push_back({"pairs_skipped", static_cast<double>(skipped)});
  if (checked == 0) {
    rep.status = VerificationStatus::NotApplicable;
    rep.notes.push_back("no vertex pair closer than 2r with an arc of turn <= pi/2");
    return rep;
  }
  rep.measured_slack = worst;
  rep.tolerance = tol;
  rep.witness = {{"a_s", cum[wi]}, {"b_s", cum[wj]}, {"chord", worst_chord}, {"arc_length", worst_len}};
  finish(rep);
  return rep;
}

VerificationReport verify_forward(const SampledCurve& curve, double r, double theta, double tol) {
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidRadius, "verify_forward: r must be positive");
  const OsculatingReport par = par_regular_check(curve, r);
  if (!par.ok) throw Error(ErrorKind::HypothesisFailed, "verify_forward: curve is not par(r)-regular at this resolution");
  const LtbReport ltb = max_delta(curve, theta);
  const LipschitzReport lip = lipschitz_constant(curve);
  const double required = 2.0 * r * std::sin(theta / 2.0);
  const double delta_margin = ltb.delta - required + ltb.sampling_slack;
  const double k_margin = lip.infinite ? -kInf : (1.0 / r + tol) - lip.k;

  VerificationReport rep = make_report("forward", curve, tol);
  rep.measured_slack = std::min(delta_margin, r * k_margin);
  rep.tolerance = 0.0;
  rep.witness = {{"delta", ltb.delta},
                 {"required_delta", required},
                 {"delta_margin", ltb.delta - required},
                 {"k", lip.k},
                 {"k_bound", 1.0 / r},
                 {"k_margin", 1.0 / r - lip.k},
                 {"witness_a_s", ltb.witness_a.s},
                 {"witness_b_s", ltb.witness_b.s}};
  rep.config.push_back({"r", r});
  rep.config.push_back({"theta", theta});
  rep.config.push_back({"sampling_slack", ltb.sampling_slack});
  rep.config.push_back({"tau_osc", par.tau_osc});
  if (ltb.capped) rep.notes.push_back("no violating pair; delta capped at the diameter");
  finish(rep);
  return rep;
}

VerificationReport verify_converse(const SampledCurve& curve) {
  if (!curve.closed()) throw Error(ErrorKind::OutOfRange, "verify_converse: curve must be closed");
  VerificationReport rep = make_report("converse", curve, 0.0);
  const LipschitzReport lip = lipschitz_constant(curve);
  rep.config.push_back({"angular_points", static_cast<double>(lip.angular_points)});
  if (lip.infinite) {
    rep.status = VerificationStatus::NotApplicable;
    rep.notes.push_back("angular points present: Lipschitz constant is infinite");
    return rep;
  }
  const LtbReport ltb = max_delta(curve, kPi / 2.0);
  const double r = lip.k > 0.0 ? 1.0 / lip.k : kInf;
  const double bound = std::min(ltb.delta / 2.0, r);

  const ReachReport bis = reach_bisection(curve);
  double reach = bis.reach;
  rep.witness.push_back({"reach_bisection", bis.reach});
  try {
    const ReachReport pw = reach_pairwise(curve);
    rep.witness.push_back({"reach_pairwise", pw.reach});
    reach = std::min(reach, pw.reach);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CornerPresent) throw;
    rep.notes.push_back("pairwise reach skipped: corner present");
  }
  const double tol_combined = ltb.sampling_slack + 0.02 * reach;
  const double r1 = 0.95 * bound;
  const bool par_ok = r1 > 0.0 && par_regular_check(curve, r1, true).ok;

  rep.measured_slack = reach - bound;
  rep.tolerance = tol_combined;
  rep.witness.push_back({"reach", reach});
  rep.witness.push_back({"delta", ltb.delta});
  rep.witness.push_back({"k", lip.k});
  rep.witness.push_back({"bound", bound});
  rep.witness.push_back({"par_regular_at_r1", par_ok ? 1.0 : 0.0});
  if (bis.center) {
    rep.witness.push_back({"center_x", bis.center->x});
    rep.witness.push_back({"center_y", bis.center->y});
  }
  rep.config.push_back({"tol_combined", tol_combined});
  rep.config.push_back({"r1", r1});
  if (bis.below_resolution) rep.notes.push_back("bisection reach below resolution");
  finish(rep);
  if (!par_ok) {
    rep.status = VerificationStatus::Fails;
    rep.notes.push_back("par_regular_check fails at r1 = 0.95 min(delta/2, r)");
  }
  return rep;
}

VerificationReport verify_eq_bounds(const SampledCurve& curve, const CurvePoint& a, const CurvePoint& b, double r1,
                                    double tol) {
  if (!(r1 > 0.0) || !std::isfinite(r1)) throw Error(ErrorKind::InvalidRadius, "verify_eq_bounds: r1 must be positive");
  if (!curve.closed()) throw Error(ErrorKind::OutOfRange, "verify_eq_bounds: curve must be closed");
  const LipschitzReport lip = lipschitz_constant(curve);
  if (lip.infinite || lip.k > 1.0 / r1 + tol) {
    throw Error(ErrorKind::HypothesisFailed, "verify_eq_bounds: Lipschitz constant exceeds 1/r1");
  }
  VerificationReport rep = make_report("eq-bounds", curve, tol);
  rep.config.push_back({"r1", r1});
  const double chord = distance(a.position, b.position);
  const LtbReport ltb = max_delta(curve, kPi / 2.0);
  std::optional<StraightestArcResult> sa;
  try {
    sa = straightest_arc(curve, a, b, ltb.delta + ltb.sampling_slack, tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OutOfRange && e.kind() != ErrorKind::NoStraightArc) throw;
  }
  const double allowance = endpoint_turn_allowance(curve, a, b);
  rep.config.push_back({"endpoint_allowance", allowance});
  rep.witness.push_back({"chord", chord});

  double slack = kInf;
  bool any = false;
  if (sa && chord < 2.0 * r1) {
    const double rhs = 2.0 * r1 * std::sin(sa->length / (2.0 * r1));
    rep.witness.push_back({"chord_arc_length", sa->length});
    rep.witness.push_back({"chord_slack", chord - rhs});
    slack = std::min(slack, chord - rhs);
    any = true;
  } else {
    rep.notes.push_back(sa ? "chord bound skipped: chord not below 2 r1" : "chord bound skipped: no arc of turn <= pi/2 between a and b");
  }

  const ReachReport bis = reach_bisection(curve);
  if (!bis.center || bis.below_resolution) {
    rep.notes.push_back("disk bound skipped: no empty-disk centre from the reach witness");
  } else {
    const Point2 o = *bis.center;
    const double r_prime = distance(o, a.position);
    const double geo_tol = 2.0 * curve.max_spacing() + 0.02 * r_prime;
    const bool equidistant = std::abs(distance(o, b.position) - r_prime) <= geo_tol;
    const bool empty = distance_to_curve(curve, o) >= r_prime - geo_tol;
    if (!equidistant || !empty) {
      rep.notes.push_back("disk bound skipped: a and b are not nearest points of the empty-disk centre");
    } else {
      const double k_sa = sa ? sa->turn : lesser_turn_arc(curve, a, b).turn;
      if (!sa) rep.notes.push_back("disk bound uses the lesser-turn arc");
      const double k_bar = 2.0 * std::asin(std::min(1.0, chord / (2.0 * r_prime)));
      const double turn_slack = k_sa + allowance - k_bar;
      rep.witness.push_back({"r_prime", r_prime});
      rep.witness.push_back({"disk_circle_turn", k_bar});
      rep.witness.push_back({"disk_arc_turn", k_sa});
      rep.witness.push_back({"disk_turn_slack", turn_slack});
      slack = std::min(slack, turn_slack);
      if (k_sa <= kPi) {
        const double sine_slack = 2.0 * r_prime * std::sin(std::min(k_sa + allowance, kPi) / 2.0) - chord;
        rep.witness.push_back({"disk_sine_slack", sine_slack});
        slack = std::min(slack, sine_slack);
      }
      any = true;
    }
  }
  if (!any) {
    rep.status = VerificationStatus::NotApplicable;
    return rep;
  }
  rep.measured_slack = slack;
  rep.tolerance = tol;
  finish(rep);
  return rep;
}

namespace {

struct Derived {
  ReachReport reach;
  LipschitzReport lip;
};

Derived derive(const SampledCurve& curve) { return {reach_bisection(curve), lipschitz_constant(curve)}; }

template <class F>
VerificationReport guarded(std::string claim, const SampledCurve& curve, double tol, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (!is_hypothesis_error(e.kind())) throw;
    return hypothesis_failed(std::move(claim), curve, tol, e.what());
  }
}

VerificationReport claim_forward(const SampledCurve& curve, const Derived& d, double tol) {
  if (!(d.reach.reach > 0.0)) return hypothesis_failed("forward", curve, tol, "no positive reach at this resolution");
  return guarded("forward", curve, tol, [&] { return verify_forward(curve, 0.9 * d.reach.reach, kPi / 2.0, tol); });
}

VerificationReport claim_length_bound(const SampledCurve& curve, const Derived& d, double tol) {
  if (d.lip.infinite || !(d.lip.k > 0.0)) {
    return hypothesis_failed("length-bound", curve, tol, "no finite positive Lipschitz constant");
  }
  return guarded("length-bound", curve, tol, [&] { return verify_length_bound(curve, 1.0 / d.lip.k, tol); });
}

VerificationReport claim_schur(const SampledCurve& curve, const Derived& d, double tol) {
  if (d.lip.infinite || !(d.lip.k > 0.0)) return hypothesis_failed("schur", curve, tol, "no finite positive Lipschitz constant");
  const double r_ref = 1.0 / d.lip.k;
  return guarded("schur", curve, tol, [&] {
    if (!curve.closed()) return verify_schur(curve, r_ref, tol, d.lip.min_arc_length_used);
    // End on a vertex: a sliver end edge would carry half an angle alone.
    const auto cum = curve.cum_length();
    const double target = 0.9 * std::min(kPi * r_ref, curve.total_length() / 2.0);
    const auto it = std::upper_bound(cum.begin(), cum.end(), target);
    const double len = it - cum.begin() >= 3 ? *(it - 1) : target;
    VerificationReport r = verify_schur(subarc(curve, {0.0, len}), r_ref, tol, d.lip.min_arc_length_used);
    r.config.push_back({"arc_start", 0.0});
    r.config.push_back({"arc_length", len});
    return r;
  });
}

VerificationReport claim_turn_containment(const SampledCurve& curve, const Derived& d, double tol) {
  const double total = curve.total_length();
  const CurvePoint a = locate(curve, d.reach.witness_a);
  const double r_reach = d.reach.reach;
  const double offset = r_reach > 0.0 ? std::min(r_reach * kPi / 2.0, total / 4.0) : total / 8.0;
  const CurvePoint b = point_at(curve, a.s + offset);
  const double chord = distance(a.position, b.position);
  double radius = std::max(r_reach, chord / 2.0);
  for (int attempt = 0; attempt < 40; ++attempt) {
    try {
      return verify_turn_containment(curve, a, b, radius, tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GeometryPreconditionFailed) throw;
    }
    radius *= 1.5;
  }
  return hypothesis_failed("turn-containment", curve, tol, "no inscribed circle arc found between the chosen points");
}

VerificationReport run_one(const SampledCurve& curve, std::string_view claim, const Derived& d, double tol) {
  if (!curve.closed() && claim != "schur") {
    return hypothesis_failed(std::string(claim), curve, tol, "claim requires a closed curve");
  }
  if (claim == "forward") return claim_forward(curve, d, tol);
  if (claim == "converse") return verify_converse(curve);
  if (claim == "length-bound") return claim_length_bound(curve, d, tol);
  if (claim == "schur") return claim_schur(curve, d, tol);
  if (claim == "turn-containment") return claim_turn_containment(curve, d, tol);
  throw Error(ErrorKind::InputError, "unknown claim: " + std::string(claim));
}

Derived derive_for(const SampledCurve& curve) {
  if (curve.closed()) return derive(curve);
  Derived d;
  d.lip = lipschitz_constant(curve);
  return d;
}

}  // namespace

std::vector<VerificationReport> run_all(const SampledCurve& curve, double tol) {
  const Derived d = derive_for(curve);
  std::vector<VerificationReport> out;
  for (std::string_view claim : {"forward", "converse", "length-bound", "schur", "turn-containment"}) {
    out.push_back(run_one(curve, claim, d, tol));
  }
  return out;
}

VerificationReport run_claim(const SampledCurve& curve, std::string_view claim, double tol) {
  static constexpr std::string_view kClaims[] = {"forward", "converse", "length-bound", "schur", "turn-containment"};
  if (std::find(std::begin(kClaims), std::end(kClaims), claim) == std::end(kClaims)) {
    throw Error(ErrorKind::InputError, "unknown claim: " + std::string(claim));
  }
  if (claim == "converse" && curve.closed()) return verify_converse(curve);
  return run_one(curve, claim, derive_for(curve), tol);
}

int exit_code_for(std::span<const VerificationReport> reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.status == VerificationStatus::Fails) return 1;
    if (r.status != VerificationStatus::Holds) code = 2;
  }
  return code;
}

namespace {

nlohmann::ordered_json fields_json(const Fields& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : f) j[k] = v;
  return j;
}

nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["status"] = std::string(to_string(r.status));
  j["holds"] = r.holds();
  j["slack"] = r.measured_slack;
  j["tolerance"] = r.tolerance;
  j["witness"] = fields_json(r.witness);
  j["config"] = fields_json(r.config);
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string reports_to_json(std::span<const VerificationReport> reports) {
  if (reports.size() == 1) return report_json(reports.front()).dump(2) + "\n";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

std::string reports_to_csv(std::span<const VerificationReport> reports) {
  std::ostringstream out;
  out << "claim,status,holds,slack,tolerance\n";
  for (const auto& r : reports) {
    out << r.claim << ',' << to_string(r.status) << ',' << (r.holds() ? "true" : "false") << ','
        << format_real(r.measured_slack) << ',' << format_real(r.tolerance) << '\n';
  }
  return out.str();
}

void write_svg(std::ostream& out, const SampledCurve& curve, std::span<const SvgMark> marks) {
  double min_x = kInf, min_y = kInf, max_x = -kInf, max_y = -kInf;
  auto grow = [&](double x, double y, double pad) {
    min_x = std::min(min_x, x - pad);
    min_y = std::min(min_y, y - pad);
    max_x = std::max(max_x, x + pad);
    max_y = std::max(max_y, y + pad);
  };
  for (const Point2& p : curve.vertices()) grow(p.x, p.y, 0.0);
  for (const SvgMark& m : marks) grow(m.at.x, m.at.y, m.radius);
  const double size = std::max(max_x - min_x, max_y - min_y);
  const double margin = 0.05 * size;
  const double stroke = 0.004 * size;
  char buf[256];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::string(buf);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(min_x - margin) << ' ' << num(-max_y - margin)
      << ' ' << num(max_x - min_x + 2 * margin) << ' ' << num(max_y - min_y + 2 * margin) << "\">\n";
  out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << num(stroke) << "\" d=\"";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Point2& p = curve.vertex(i);
    out << (i == 0 ? "M" : " L") << num(p.x) << ' ' << num(-p.y);
  }
  if (curve.closed()) out << " Z";
  out << "\"/>\n";
  for (const SvgMark& m : marks) {
    const double r = m.radius > 0.0 ? m.radius : 2.0 * stroke;
    out << "<circle cx=\"" << num(m.at.x) << "\" cy=\"" << num(-m.at.y) << "\" r=\"" << num(r) << "\" "
        << (m.radius > 0.0 ? "fill=\"none\" stroke=\"red\"" : "fill=\"red\"") << " stroke-width=\"" << num(stroke)
        << "\"/>\n";
    if (!m.label.empty()) {
      out << "<text x=\"" << num(m.at.x + 3 * stroke) << "\" y=\"" << num(-m.at.y - 3 * stroke) << "\" font-size=\""
          << num(0.03 * size) << "\">" << m.label << "</text>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace curveturn
