#include "isomet/error.hpp"

#include <utility>

namespace isomet {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::SymmetryViolation: return "SymmetryViolation";
    case ErrorKind::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorKind::NegativeDistance: return "NegativeDistance";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::NotUltrametric: return "NotUltrametric";
    case ErrorKind::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::DomainGap: return "DomainGap";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::MissingPrefix: return "MissingPrefix";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::MalformedStructure: return "MalformedStructure";
    case ErrorKind::SequenceTooShort: return "SequenceTooShort";
    case ErrorKind::NotAnIsometry: return "NotAnIsometry";
    case ErrorKind::RepairFailed: return "RepairFailed";
    case ErrorKind::InsufficientThresholds: return "InsufficientThresholds";
    case ErrorKind::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorKind::NotLeftInvariant: return "NotLeftInvariant";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::OracleFailure: return "OracleFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail, std::vector<std::size_t> indices,
             std::vector<Rational> values)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
      kind_(kind),
      indices_(std::move(indices)),
      values_(std::move(values)) {}

}  // namespace isomet
