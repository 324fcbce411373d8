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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace labatie {

enum class ErrorCode {
  kDivisionByZero,
  kBothZero,
  kZeroPolynomial,
  kDegreeOrder,
  kFieldMismatch,
  kInvalidModulus,
  kSyntaxError,
  kNegativeExponent,
  kZeroDenominator,
  kModulusMismatch,
  kZeroInput,
  kDegyZero,
  kNotCoprime,
  kInexactDivision,
  kInfiniteMultiplicity,
  kCapExceeded,
};

/// Stable identifier used in diagnostics and CLI output, e.g. "NotCoprime".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace labatie
