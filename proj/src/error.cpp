#include "qlogic/error.hpp"

namespace qlogic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotProjector: return "NotProjector";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::ZeroProbabilityBranch: return "ZeroProbabilityBranch";
    case ErrorKind::RankAmbiguous: return "RankAmbiguous";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::IllegalValueForSystem: return "IllegalValueForSystem";
    case ErrorKind::NoState: return "NoState";
    case ErrorKind::UnboundAtom: return "UnboundAtom";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace qlogic
