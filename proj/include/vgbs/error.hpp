// SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef VGBS_ERROR_HPP
#define VGBS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vgbs {

enum class ErrorCode {
  NotContained,
  NotCorankOne,
  NotSaturated,
  NotRepresentable,
  NotUnimodular,
  DimensionMismatch,
  NotOneOneLoop,
  NotTwoTwoEdge,
  NotIndexTwo,
  NotReduced,
  UnsupportedVertexKind,
  WitnessInvalid,
  NoDeficiencyOne,
  RankTooSmall,
  UnknownId,
  InvalidGraph,
  ParseError,
  ParamError,
  Internal,
};

const char* to_string(ErrorCode code);

// All failures in the core raise this; the C layer maps `code()` onto its
// status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vgbs

#endif  // VGBS_ERROR_HPP
