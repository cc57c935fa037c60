// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace linfvd {

enum class ErrorCode {
  DimensionMismatch,
  InvalidArgument,
  MalformedDocument,
  NotAxisAligned,
  NotClosed,
  NonManifoldVertex,
  SelfIntersecting,
  HoleOutsideOuter,
  Degenerate,
  NotAdjacent,
  MissingBvh,
  InfeasibleSpec,
  InternalInconsistency,
  Io,
};

const char* error_code_name(ErrorCode code);

/// True for the codes that describe a rejected input shape.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace linfvd
