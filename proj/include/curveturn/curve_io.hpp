#pragma once

#include <iosfwd>
#include <string>

#include "curveturn/curve.hpp"
#include "curveturn/generators.hpp"

namespace curveturn {

/// Curve exchange format: header `s,x,y`, one row per vertex, then a trailer
/// line `# closed=true|false`.  Values are written with round-trip precision.
void write_curve_csv(std::ostream& out, const SampledCurve& curve);
SampledCurve read_curve_csv(std::istream& in);

SampledCurve load_curve_csv(const std::string& path);
void save_curve_csv(const std::string& path, const SampledCurve& curve);

/// Curve-spec document: {"family": ..., "params": {...}, "samples": N}.
/// Polylines carry "points": [[x, y], ...] and "closed".
CurveSpec parse_curve_spec(const std::string& json_text);
std::string curve_spec_to_json(const CurveSpec& spec);
CurveSpec load_curve_spec(const std::string& path);

/// "%.17g" formatting shared by every text emitter.
std::string format_real(double v);

}  // namespace curveturn
