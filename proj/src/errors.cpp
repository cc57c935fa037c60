// SPDX-License-Identifier: Apache-2.0
#include "linfvd/errors.hpp"

namespace linfvd {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::NotAxisAligned: return "NotAxisAligned";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NonManifoldVertex: return "NonManifoldVertex";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::HoleOutsideOuter: return "HoleOutsideOuter";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::MissingBvh: return "MissingBvh";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument:
    case ErrorCode::NotAxisAligned:
    case ErrorCode::NotClosed:
    case ErrorCode::NonManifoldVertex:
    case ErrorCode::SelfIntersecting:
    case ErrorCode::HoleOutsideOuter:
    case ErrorCode::Degenerate:
      return true;
    default:
      return false;
  }
}

}  // namespace linfvd
