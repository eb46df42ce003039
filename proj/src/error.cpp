#include "tsrforge/error.hpp"

namespace tsrforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::BaseNotSubfield: return "BaseNotSubfield";
    case ErrorKind::NonSquareMatrix: return "NonSquareMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FactorizationOverflow: return "FactorizationOverflow";
    case ErrorKind::FactorizationFailed: return "FactorizationFailed";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::CoefficientNotDescended: return "CoefficientNotDescended";
    case ErrorKind::SingularB: return "SingularB";
    case ErrorKind::ScaleExceeded: return "ScaleExceeded";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::FiberSizeViolation: return "FiberSizeViolation";
    case ErrorKind::InvalidParity: return "InvalidParity";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::ExistenceViolation: return "ExistenceViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tsrforge
