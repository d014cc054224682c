#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isomet/rational.hpp"

namespace isomet {

enum class ErrorKind {
  // metric-core
  EmptySpace,
  NonzeroDiagonal,
  SymmetryViolation,
  ZeroOffDiagonal,
  NegativeDistance,
  TriangleViolation,
  // ultrametric
  NotUltrametric,
  NonPositiveRadius,
  PointOutOfRange,
  NotMonotone,
  DomainGap,
  // trees
  EmptyInput,
  MissingPrefix,
  // structures
  SignatureMismatch,
  MalformedStructure,
  // reductions
  SequenceTooShort,
  NotAnIsometry,
  RepairFailed,
  InsufficientThresholds,
  RadiusTooSmall,
  NotLeftInvariant,
  NotAnAction,
  PreconditionViolated,
  // verify
  OracleFailure,
  // io
  ParseError,
};

std::string_view error_name(ErrorKind kind);

/// Domain error raised by every module. `indices` and `values` carry the
/// witness named by the error kind (offending point indices, distances).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail, std::vector<std::size_t> indices = {},
        std::vector<Rational> values = {});

  ErrorKind kind() const { return kind_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> indices_;
  std::vector<Rational> values_;
};

}  // namespace isomet
