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

#include <string>
#include <string_view>

#include "labatie/bipoly.hpp"
#include "labatie/field.hpp"

namespace labatie {

/// Polynomial text plus the field its literals live in.
struct PolySource {
  std::string text;
  FieldSpec spec;
};

/// Parses
///
///   expr   := ['-'] term (('+'|'-') ['-'] term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' digits)?
///   base   := 'x' | 'y' | number | '(' expr ')'
///   number := digits ('/' digits)?
///
/// and expands to canonical form. Throws ParseError with code kSyntaxError,
/// kNegativeExponent, kZeroDenominator or kModulusMismatch (a fraction literal
/// over GF(p)). Integer literals are reduced mod p over GF(p).
BiPoly parse_poly(const PolySource& src);
BiPoly parse_poly(std::string_view text, const FieldSpec& spec);

/// Parses a signed scalar literal: ['-'] digits ('/' digits)?.
FieldElement parse_scalar(std::string_view text, const FieldSpec& spec);

/// Canonical text: terms by decreasing y-power then decreasing x-power,
/// e.g. "x*y^2 - 1". parse_poly(format_poly(w)) == w.
std::string format_poly(const BiPoly& w);

}  // namespace labatie
