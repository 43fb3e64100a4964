#include "walkcolor/error.hpp"

namespace walkcolor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::CycleInCoverRelations: return "CycleInCoverRelations";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::AntichainLimitExceeded: return "AntichainLimitExceeded";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotProperColoring: return "NotProperColoring";
    case ErrorKind::MissingColor: return "MissingColor";
    case ErrorKind::InvalidInputColoring: return "InvalidInputColoring";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::BudgetViolated: return "BudgetViolated";
    case ErrorKind::DomainCollision: return "DomainCollision";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_resource_limit(ErrorKind kind) {
  return kind == ErrorKind::AntichainLimitExceeded || kind == ErrorKind::SizeLimitExceeded;
}

}  // namespace walkcolor
