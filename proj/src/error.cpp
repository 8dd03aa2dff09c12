#include "khtot/error.hpp"

namespace khtot {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSyntax: return "MalformedSyntax";
    case ErrorKind::BadIncidence: return "BadIncidence";
    case ErrorKind::EmptyDiagram: return "EmptyDiagram";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::CircleCollision: return "CircleCollision";
    case ErrorKind::BidegreeViolation: return "BidegreeViolation";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::FixtureRangeError: return "FixtureRangeError";
    case ErrorKind::InconsistentFamily: return "InconsistentFamily";
  }
  return "Unknown";
}

}  // namespace khtot
