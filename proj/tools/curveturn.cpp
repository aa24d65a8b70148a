// curveturn: command-line front end for the curve turn / reach library.

#include <cmath>
#include <cstdlib>
#include <map>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curveturn/curve_io.hpp"
#include "curveturn/generators.hpp"
#include "curveturn/ltb.hpp"
#include "curveturn/regularity.hpp"
#include "curveturn/turn.hpp"
#include "curveturn/verify.hpp"

namespace ct = curveturn;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 3;

struct Options {
  std::string in_path;
  std::string spec_path;
  std::string family;
  std::optional<std::size_t> samples;
  std::optional<double> tol;
  std::string format = "json";
  bool format_given = false;
  std::string out_path;
  std::string svg_path;
  std::map<std::string, double> params;

  double theta = ct::kPi / 2.0;
  double min_len = 0.0;
  double radius = 0.0;
  std::string method = "both";
  std::string claim;
};

double default_tol(double fallback) {
  if (const char* env = std::getenv("CURVETURN_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
    throw ct::Error(ct::ErrorKind::InputError, "CURVETURN_TOL is not a positive number");
  }
  return fallback;
}

double tolerance(const Options& o, double fallback) { return o.tol ? *o.tol : default_tol(fallback); }

ct::CurveSpec build_spec(const Options& o) {
  ct::CurveSpec spec;
  if (!o.spec_path.empty()) {
    spec = ct::load_curve_spec(o.spec_path);
  } else {
    spec = ct::spec_for(o.family);
  }
  for (const auto& [k, v] : o.params) spec.params[k] = v;
  if (o.samples) spec.samples = *o.samples;
  return spec;
}

ct::SampledCurve load_curve(const Options& o) {
  if (!o.in_path.empty()) {
    ct::SampledCurve c = ct::load_curve_csv(o.in_path);
    if (o.samples) c = ct::resample(c, *o.samples);
    return c;
  }
  if (o.spec_path.empty() && o.family.empty()) {
    throw ct::Error(ct::ErrorKind::InputError, "no curve given: use --in, --spec or --family");
  }
  return ct::generate(build_spec(o));
}

void emit(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw ct::Error(ct::ErrorKind::InputError, "cannot write " + o.out_path);
  f << text;
}

void emit_svg(const Options& o, const ct::SampledCurve& curve, const std::vector<ct::SvgMark>& marks) {
  if (o.svg_path.empty()) return;
  std::ofstream f(o.svg_path, std::ios::binary);
  if (!f) throw ct::Error(ct::ErrorKind::InputError, "cannot write " + o.svg_path);
  ct::write_svg(f, curve, marks);
}

// Non-finite values print as strings so the output stays valid JSON.
json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? json("nan") : json(v > 0 ? "inf" : "-inf");
}

json point_json(const ct::CurvePoint& p) { return json{{"s", number(p.s)}, {"x", number(p.position.x)}, {"y", number(p.position.y)}}; }

std::string csv_rows(const std::vector<std::pair<std::string, std::string>>& cols) {
  std::string head, row;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    head += (i ? "," : "") + cols[i].first;
    row += (i ? "," : "") + cols[i].second;
  }
  return head + "\n" + row + "\n";
}

std::string fmt(double v) { return ct::format_real(v); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_gen(const Options& o) {
  const ct::SampledCurve c = load_curve(o);
  std::ostringstream s;
  ct::write_curve_csv(s, c);
  emit(o, s.str());
  emit_svg(o, c, {});
  return kExitOk;
}

int cmd_turn(const Options& o) {
  const double tol = tolerance(o, ct::kDefaultTurnTol);
  const ct::SampledCurve c = load_curve(o);
  const ct::TurnReport r = o.in_path.empty() ? ct::curve_turn(build_spec(o), tol) : ct::curve_turn(c, tol);
  if (o.format == "csv") {
    emit(o, csv_rows({{"value", fmt(r.value)},
                      {"refinement_levels", std::to_string(r.refinement_levels)},
                      {"converged", r.converged ? "true" : "false"},
                      {"last_increment", fmt(r.last_increment)}}));
  } else {
    json j;
    j["value"] = number(r.value);
    j["refinement_levels"] = r.refinement_levels;
    j["converged"] = r.converged;
    j["last_increment"] = number(r.last_increment);
    j["level_values"] = r.level_values;
    j["level_vertices"] = r.level_vertices;
    j["tolerances"] = json{{"tol", tol}};
    emit(o, dump(j));
  }
  emit_svg(o, c, {});
  return kExitOk;
}

int cmd_ltb(const Options& o) {
  const double tol = tolerance(o, ct::kDefaultLtbTol);
  const ct::SampledCurve c = load_curve(o);
  const ct::LtbReport r = ct::max_delta(c, o.theta);
  if (o.format == "csv") {
    emit(o, csv_rows({{"theta", fmt(r.theta)},
                      {"delta", fmt(r.delta)},
                      {"capped", r.capped ? "true" : "false"},
                      {"witness_a_s", fmt(r.witness_a.s)},
                      {"witness_b_s", fmt(r.witness_b.s)},
                      {"pairs_scanned", std::to_string(r.pairs_scanned)}}));
  } else {
    json j;
    j["theta"] = r.theta;
    j["delta"] = number(r.delta);
    j["capped"] = r.capped;
    j["witnesses"] = r.capped ? json::array() : json::array({point_json(r.witness_a), point_json(r.witness_b)});
    j["pairs_scanned"] = r.pairs_scanned;
    j["violations"] = r.violations;
    j["resolution"] = c.size();
    j["tolerances"] = json{{"tol", tol}, {"sampling_slack", r.sampling_slack}};
    emit(o, dump(j));
  }
  std::vector<ct::SvgMark> marks;
  if (!r.capped) marks = {{r.witness_a.position, 0.0, "a"}, {r.witness_b.position, 0.0, "b"}};
  emit_svg(o, c, marks);
  return kExitOk;
}

int cmd_lipschitz(const Options& o) {
  const ct::SampledCurve c = load_curve(o);
  const ct::LipschitzReport r = ct::lipschitz_constant(c, o.min_len);
  if (o.format == "csv") {
    emit(o, csv_rows({{"k", r.infinite ? "inf" : fmt(r.k)},
                      {"infinite", r.infinite ? "true" : "false"},
                      {"range_start", fmt(r.witness_range.start)},
                      {"range_end", fmt(r.witness_range.end)},
                      {"min_len", fmt(r.min_arc_length_used)}}));
  } else {
    json j;
    j["k"] = number(r.k);
    j["infinite"] = r.infinite;
    j["witness_range"] = json{{"start", number(r.witness_range.start)}, {"end", number(r.witness_range.end)}};
    j["min_arc_length_used"] = r.min_arc_length_used;
    j["angular_points"] = r.angular_points;
    j["resolution"] = c.size();
    emit(o, dump(j));
  }
  emit_svg(o, c, {});
  return kExitOk;
}

json reach_json(const ct::ReachReport& r) {
  json j;
  j["method"] = std::string(ct::to_string(r.method));
  j["reach"] = number(r.reach);
  j["below_resolution"] = r.below_resolution;
  j["witness"] = point_json(r.witness_a);
  if (r.witness_b) j["witness_b"] = point_json(*r.witness_b);
  if (r.center) j["center"] = json{{"x", r.center->x}, {"y", r.center->y}};
  j["resolution"] = r.resolution;
  return j;
}

int cmd_reach(const Options& o) {
  const ct::SampledCurve c = load_curve(o);
  std::vector<ct::ReachReport> reports;
  std::vector<std::string> notes;
  if (o.method == "pairwise" || o.method == "both") {
    try {
      reports.push_back(ct::reach_pairwise(c));
    } catch (const ct::Error& e) {
      if (o.method == "pairwise" || e.kind() != ct::ErrorKind::CornerPresent) throw;
      notes.push_back("pairwise skipped: corner present");
    }
  }
  if (o.method == "bisection" || o.method == "both") {
    reports.push_back(o.tol ? ct::reach_bisection(c, *o.tol) : ct::reach_bisection(c));
  }
  if (o.format == "csv") {
    std::string text = "method,reach,below_resolution\n";
    for (const auto& r : reports) {
      text += std::string(ct::to_string(r.method)) + "," + fmt(r.reach) + "," + (r.below_resolution ? "true" : "false") + "\n";
    }
    emit(o, text);
  } else {
    json j;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(reach_json(r));
    j["notes"] = notes;
    emit(o, dump(j));
  }
  std::vector<ct::SvgMark> marks;
  for (const auto& r : reports) {
    marks.push_back({r.witness_a.position, 0.0, "a"});
    if (r.witness_b) marks.push_back({r.witness_b->position, 0.0, "b"});
    if (r.center && r.reach > 0.0) marks.push_back({*r.center, r.reach, "reach"});
  }
  emit_svg(o, c, marks);
  return kExitOk;
}

int cmd_parreg(const Options& o) {
  const ct::SampledCurve c = load_curve(o);
  if (!(o.radius > 0.0)) throw ct::Error(ct::ErrorKind::InvalidRadius, "parreg needs --radius > 0");
  const ct::OsculatingReport r = ct::par_regular_check(c, o.radius);
  if (o.format == "csv") {
    std::ostringstream s;
    ct::write_failures_csv(s, r.failures);
    emit(o, s.str());
  } else {
    json j;
    j["r"] = r.r;
    j["ok"] = r.ok;
    j["failure_count"] = r.failures.size();
    j["tau_osc"] = r.tau_osc;
    json fails = json::array();
    for (const auto& f : r.failures) {
      fails.push_back(json{{"s", f.s}, {"side", std::string(ct::to_string(f.side))}, {"clearance", f.clearance}});
    }
    j["failures"] = fails;
    j["resolution"] = c.size();
    emit(o, dump(j));
  }
  std::vector<ct::SvgMark> marks;
  if (r.worst) marks.push_back({r.worst->center, r.r, "worst"});
  emit_svg(o, c, marks);
  return r.ok ? kExitOk : 1;
}

int cmd_verify(const Options& o) {
  const double tol = tolerance(o, ct::kDefaultVerifyTol);
  const ct::SampledCurve c = load_curve(o);
  std::vector<ct::VerificationReport> reports;
  if (o.claim == "all") {
    reports = ct::run_all(c, tol);
  } else {
    reports.push_back(ct::run_claim(c, o.claim, tol));
  }
  emit(o, o.format == "csv" ? ct::reports_to_csv(reports) : ct::reports_to_json(reports));
  std::vector<ct::SvgMark> marks;
  for (const auto& r : reports) {
    double cx = 0, cy = 0, rr = 0;
    int found = 0;
    for (const auto& [k, v] : r.witness) {
      if (k == "center_x") cx = v, ++found;
      if (k == "center_y") cy = v, ++found;
      if (k == "reach") rr = v;
    }
    if (found == 2 && rr > 0.0) marks.push_back({ct::Point2{cx, cy}, rr, r.claim});
  }
  emit_svg(o, c, marks);
  return ct::exit_code_for(reports);
}

int cmd_profile(const Options& o) {
  const ct::SampledCurve c = load_curve(o);
  const auto profile = ct::turn_profile(c);
  if (o.format_given && o.format == "json") {
    json j = json::array();
    for (const auto& row : profile) j.push_back(json{{"s", row.s}, {"kappa_cum", row.cumulative}});
    emit(o, dump(j));
  } else {
    std::ostringstream s;
    ct::write_turn_profile_csv(s, profile);
    emit(o, s.str());
  }
  emit_svg(o, c, {});
  return kExitOk;
}

void add_common(CLI::App& app, Options& o) {
  app.add_option("--in", o.in_path, "curve CSV (s,x,y + closed trailer)");
  app.add_option("--spec", o.spec_path, "curve spec JSON");
  app.add_option("--family", o.family, "circle, ellipse, ngon, square, rounded, bone");
  app.add_option("--samples", o.samples, "number of samples")->check(CLI::Range(3, 1 << 22));
  app.add_option("--tol", o.tol, "tolerance (overrides CURVETURN_TOL)")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out_path, "output file (default stdout)");
  app.add_option("--svg", o.svg_path, "also write an SVG rendering");
  for (const char* p : {"r", "a", "b", "cx", "cy", "sides", "circumradius", "corner_radius", "rotation", "delta"}) {
    const std::string name = p;
    std::string flag = "--" + name;
    for (char& ch : flag) ch = ch == '_' ? '-' : ch;
    app.add_option_function<double>(flag, [&o, name](double v) { o.params[name] = v; }, "family parameter " + name);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curveturn: turn, LTB, Lipschitz turn and reach analysis of planar curves"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "write a generated curve as CSV");
  auto* turn = app.add_subcommand("turn", "turn by dyadic refinement");
  auto* ltb = app.add_subcommand("ltb", "smallest violating chord for theta");
  auto* lip = app.add_subcommand("lipschitz", "Lipschitz turn constant");
  auto* reach = app.add_subcommand("reach", "reach estimates");
  auto* parreg = app.add_subcommand("parreg", "osculating disk check at one radius");
  auto* verify = app.add_subcommand("verify", "verify a claim: forward, converse, length-bound, schur, turn-containment, all");
  auto* profile = app.add_subcommand("profile", "cumulative turn profile (CSV unless --format json)");
  for (CLI::App* sub : {gen, turn, ltb, lip, reach, parreg, verify, profile}) add_common(*sub, o);
  ltb->add_option("--theta", o.theta, "turn threshold in (0, pi]");
  lip->add_option("--min-len", o.min_len, "shortest sub-arc considered");
  reach->add_option("--method", o.method, "pairwise, bisection or both")
      ->check(CLI::IsMember({"pairwise", "bisection", "both"}));
  parreg->add_option("--radius", o.radius, "disk radius")->required();
  verify->add_option("claim", o.claim, "claim name")
      ->required()
      ->check(CLI::IsMember({"forward", "converse", "length-bound", "schur", "turn-containment", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: InputError: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(o);
    if (turn->parsed()) return cmd_turn(o);
    if (ltb->parsed()) return cmd_ltb(o);
    if (lip->parsed()) return cmd_lipschitz(o);
    if (reach->parsed()) return cmd_reach(o);
    if (parreg->parsed()) return cmd_parreg(o);
    if (verify->parsed()) return cmd_verify(o);
    if (profile->parsed()) {
      o.format_given = profile->get_option("--format")->count() > 0;
      return cmd_profile(o);
    }
  } catch (const ct::Error& e) {
    std::cerr << "error: " << ct::to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: InputError: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
