#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curveturn {

enum class ErrorKind {
  NonFinite,
  ZeroVector,
  InvalidRadius,
  DegeneratePolygon,
  InvalidSpec,
  NotSimple,
  OutOfRange,
  DegenerateRange,
  InvalidN,
  DuplicateVertex,
  PointNotOnCurve,
  NoStraightArc,
  DegenerateTangent,
  CornerPresent,
  BadBracket,
  NoIntersection,
  NotConvexInner,
  GeometryPreconditionFailed,
  LipschitzHypothesisFailed,
  HypothesisFailed,
  InputError,
};

/// Stable machine-readable name, used on the CLI diagnostic stream.
std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace curveturn
