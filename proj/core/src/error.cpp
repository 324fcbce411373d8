// Copyright 2026 The Labatie Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "labatie/error.hpp"

namespace labatie {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero:
      return "DivisionByZero";
    case ErrorCode::kBothZero:
      return "BothZero";
    case ErrorCode::kZeroPolynomial:
      return "ZeroPolynomial";
    case ErrorCode::kDegreeOrder:
      return "DegreeOrder";
    case ErrorCode::kFieldMismatch:
      return "FieldMismatch";
    case ErrorCode::kInvalidModulus:
      return "InvalidModulus";
    case ErrorCode::kSyntaxError:
      return "SyntaxError";
    case ErrorCode::kNegativeExponent:
      return "NegativeExponent";
    case ErrorCode::kZeroDenominator:
      return "ZeroDenominator";
    case ErrorCode::kModulusMismatch:
      return "ModulusMismatch";
    case ErrorCode::kZeroInput:
      return "ZeroInput";
    case ErrorCode::kDegyZero:
      return "DegyZero";
    case ErrorCode::kNotCoprime:
      return "NotCoprime";
    case ErrorCode::kInexactDivision:
      return "InexactDivision";
    case ErrorCode::kInfiniteMultiplicity:
      return "InfiniteMultiplicity";
    case ErrorCode::kCapExceeded:
      return "CapExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t position,
                       const std::string& message)
    : Error(code, "at position " + std::to_string(position) + ": " + message),
      position_(position) {}

}  // namespace labatie
