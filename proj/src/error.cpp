#include "planeval/error.hpp"

namespace planeval {

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::NonConsecutiveIds: return "NonConsecutiveIds";
    case ErrorCode::SatelliteTargetInvalid: return "SatelliteTargetInvalid";
    case ErrorCode::SatelliteOfSelfOrLater: return "SatelliteOfSelfOrLater";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::MalformedGraph: return "MalformedGraph";
    case ErrorCode::EtaNotAdjacent: return "EtaNotAdjacent";
    case ErrorCode::EtaEqualsR: return "EtaEqualsR";
    case ErrorCode::EtaMissing: return "EtaMissing";
    case ErrorCode::BranchInvalid: return "BranchInvalid";
    case ErrorCode::NonPositiveMuhat: return "NonPositiveMuhat";
    case ErrorCode::MixedRadicals: return "MixedRadicals";
    case ErrorCode::NotSupraminimal: return "NotSupraminimal";
    case ErrorCode::CertificateInconsistent: return "CertificateInconsistent";
    case ErrorCode::LineSupportInvalid: return "LineSupportInvalid";
    case ErrorCode::RTooSmall: return "RTooSmall";
    case ErrorCode::NotNPI: return "NotNPI";
    case ErrorCode::BranchSlopeUnrecognized: return "BranchSlopeUnrecognized";
    case ErrorCode::TOutOfRange: return "TOutOfRange";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

ErrorKind kind_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaError:
    case ErrorCode::NonConsecutiveIds:
    case ErrorCode::SatelliteTargetInvalid:
    case ErrorCode::SatelliteOfSelfOrLater:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::OrderViolation:
    case ErrorCode::EtaNotAdjacent:
    case ErrorCode::EtaEqualsR:
    case ErrorCode::EtaMissing:
    case ErrorCode::BranchInvalid:
    case ErrorCode::LineSupportInvalid:
    case ErrorCode::DimensionMismatch:
      return ErrorKind::Schema;
    default:
      return ErrorKind::Math;
  }
}

}  // namespace planeval
