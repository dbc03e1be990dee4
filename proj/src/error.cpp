#include "qrf/error.hpp"

namespace qrf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorKind::NormOutOfTolerance: return "NormOutOfTolerance";
    case ErrorKind::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorKind::InvalidSubsystem: return "InvalidSubsystem";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::InvalidBipartition: return "InvalidBipartition";
    case ErrorKind::TooFewQubits: return "TooFewQubits";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::WrongQubitCount: return "WrongQubitCount";
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
    case ErrorKind::UnknownQuantity: return "UnknownQuantity";
    case ErrorKind::GridOutOfDomain: return "GridOutOfDomain";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Config: return "Config";
  }
  return "Unknown";
}

}  // namespace qrf
