#include "curveturn/curve_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace curveturn {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_curve_csv(std::ostream& out, const SampledCurve& curve) {
  out << "s,x,y\n";
  const auto cum = curve.cum_length();
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Point2& p = curve.vertex(i);
    out << format_real(cum[i]) << ',' << format_real(p.x) << ',' << format_real(p.y) << '\n';
  }
  out << "# closed=" << (curve.closed() ? "true" : "false") << '\n';
}

SampledCurve read_curve_csv(std::istream& in) {
  std::string line;
  bool header_seen = false;
  bool closed_seen = false;
  bool closed = true;
  std::vector<Point2> pts;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("closed=");
      if (pos != std::string::npos) {
        const std::string value = line.substr(pos + 7);
        if (value == "true") closed = true;
        else if (value == "false") closed = false;
        else throw Error(ErrorKind::InputError, "curve csv: bad closed flag '" + value + "'");
        closed_seen = true;
      }
      continue;
    }
    if (!header_seen) {
      if (line != "s,x,y") throw Error(ErrorKind::InputError, "curve csv: expected header 's,x,y'");
      header_seen = true;
      continue;
    }
    std::istringstream row(line);
    std::string cell[3];
    for (auto& c : cell) {
      if (!std::getline(row, c, ',')) {
        throw Error(ErrorKind::InputError, "curve csv: short row at line " + std::to_string(line_no));
      }
    }
    try {
      pts.emplace_back(std::stod(cell[1]), std::stod(cell[2]));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::InputError, "curve csv: bad number at line " + std::to_string(line_no));
    } catch (const std::out_of_range&) {
      throw Error(ErrorKind::InputError, "curve csv: number out of range at line " + std::to_string(line_no));
    }
  }
  if (!header_seen) throw Error(ErrorKind::InputError, "curve csv: missing header");
  if (!closed_seen) throw Error(ErrorKind::InputError, "curve csv: missing '# closed=' trailer");
  return {std::move(pts), closed};
}

SampledCurve load_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InputError, "cannot open " + path);
  return read_curve_csv(in);
}

void save_curve_csv(const std::string& path, const SampledCurve& curve) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InputError, "cannot write " + path);
  write_curve_csv(out, curve);
}

CurveSpec parse_curve_spec(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InputError, std::string("curve spec: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("family") || !doc["family"].is_string()) {
    throw Error(ErrorKind::InvalidSpec, "curve spec: missing string field 'family'");
  }
  const std::string family = doc["family"].get<std::string>();
  CurveSpec spec = spec_for(family);
  try {
    if (doc.contains("params")) {
      for (const auto& [key, value] : doc["params"].items()) {
        if (key == "points") {
          spec.points.clear();
          for (const auto& p : value) spec.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        } else if (key == "closed") {
          spec.closed = value.get<bool>();
        } else {
          spec.params[key] = value.get<double>();
        }
      }
    }
    if (doc.contains("samples")) {
      const auto samples = doc["samples"].get<long long>();
      if (samples < 3) throw Error(ErrorKind::InvalidSpec, "curve spec: samples must be >= 3");
      spec.samples = static_cast<std::size_t>(samples);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("curve spec: ") + e.what());
  }
  return spec;
}

std::string curve_spec_to_json(const CurveSpec& spec) {
  nlohmann::json doc;
  doc["family"] = std::string(to_string(spec.family));
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : spec.params) params[k] = v;
  if (spec.family == Family::Polyline) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : spec.points) pts.push_back({p.x, p.y});
    params["points"] = pts;
    params["closed"] = spec.closed;
  }
  doc["params"] = params;
  doc["samples"] = spec.samples;
  return doc.dump(2);
}

CurveSpec load_curve_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InputError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_curve_spec(buf.str());
}

}  // namespace curveturn
