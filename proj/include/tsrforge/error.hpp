#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tsrforge {

enum class ErrorKind {
  CompositeCharacteristic,
  ReducibleModulus,
  BadModulus,
  FieldMismatch,
  DivisionByZero,
  DivisionByZeroPoly,
  BaseNotSubfield,
  NonSquareMatrix,
  DimensionMismatch,
  FactorizationOverflow,
  FactorizationFailed,
  ZeroConstantTerm,
  ZeroElement,
  CoefficientNotDescended,
  SingularB,
  ScaleExceeded,
  BadDegree,
  UnknownKind,
  FiberSizeViolation,
  InvalidParity,
  BudgetExhausted,
  ExistenceViolation,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers branch on kind().
class TsrError : public std::runtime_error {
 public:
  TsrError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class BudgetExhaustedError : public TsrError {
 public:
  BudgetExhaustedError(std::uint64_t candidates_tried, bool space_exhausted, const std::string& what)
      : TsrError(ErrorKind::BudgetExhausted, what),
        candidates_tried_(candidates_tried),
        space_exhausted_(space_exhausted) {}

  std::uint64_t candidates_tried() const noexcept { return candidates_tried_; }
  /// True when every candidate was tested, false when the budget ran out first.
  bool space_exhausted() const noexcept { return space_exhausted_; }

 private:
  std::uint64_t candidates_tried_;
  bool space_exhausted_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw TsrError(kind, what); }

}  // namespace tsrforge
