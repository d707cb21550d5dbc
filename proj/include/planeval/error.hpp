#pragma once

#include <stdexcept>
#include <string>

namespace planeval {

enum class ErrorCode {
  ParseError,
  SchemaError,
  NonConsecutiveIds,
  SatelliteTargetInvalid,
  SatelliteOfSelfOrLater,
  IndexOutOfRange,
  OrderViolation,
  MalformedGraph,
  EtaNotAdjacent,
  EtaEqualsR,
  EtaMissing,
  BranchInvalid,
  NonPositiveMuhat,
  MixedRadicals,
  NotSupraminimal,
  CertificateInconsistent,
  LineSupportInvalid,
  RTooSmall,
  NotNPI,
  BranchSlopeUnrecognized,
  TOutOfRange,
  DegeneratePolygon,
  DimensionMismatch,
  DivisionByZero,
};

// Schema errors come from malformed input; Math errors from unmet
// mathematical preconditions on otherwise well-formed input.
enum class ErrorKind { Schema, Math };

const char* code_name(ErrorCode code);
ErrorKind kind_of(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace planeval
