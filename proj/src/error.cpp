#include "curveturn/error.hpp"

namespace curveturn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::InvalidRadius: return "InvalidRadius";
    case ErrorKind::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegenerateRange: return "DegenerateRange";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::NoStraightArc: return "NoStraightArc";
    case ErrorKind::DegenerateTangent: return "DegenerateTangent";
    case ErrorKind::CornerPresent: return "CornerPresent";
    case ErrorKind::BadBracket: return "BadBracket";
    case ErrorKind::NoIntersection: return "NoIntersection";
    case ErrorKind::NotConvexInner: return "NotConvexInner";
    case ErrorKind::GeometryPreconditionFailed: return "GeometryPreconditionFailed";
    case ErrorKind::LipschitzHypothesisFailed: return "LipschitzHypothesisFailed";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::InputError: return "InputError";
  }
  return "Unknown";
}

}  // namespace curveturn
