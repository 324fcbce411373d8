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

#include <span>
#include <string>
#include <vector>

#include "labatie/field.hpp"

namespace labatie {

/// Dense univariate polynomial over a FieldSpec. Index j of the coefficient
/// vector holds the coefficient of t^j; the zero polynomial has no
/// coefficients and a non-zero polynomial never has a zero leading
/// coefficient.
class UniPoly {
 public:
  explicit UniPoly(const FieldSpec& spec) : spec_(spec) {}
  UniPoly(const FieldSpec& spec, std::vector<FieldElement> coeffs);
  /// Convenience for tests and literals: small integer coefficients, low
  /// degree first.
  UniPoly(const FieldSpec& spec, std::initializer_list<long> coeffs);

  static UniPoly constant(const FieldElement& c);
  /// c * t^degree.
  static UniPoly monomial(const FieldElement& c, int degree);
  /// t - c.
  static UniPoly linear_root(const FieldElement& c);

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^j; zero beyond the degree.
  FieldElement coeff(int j) const;
  /// Throws kZeroPolynomial on zero.
  const FieldElement& leading_coeff() const;

  FieldElement eval(const FieldElement& t) const;
  /// Divides by the leading coefficient; the zero polynomial maps to itself.
  UniPoly monic() const;
  UniPoly derivative() const;
  /// p(t + c).
  UniPoly shift(const FieldElement& c) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const FieldElement& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const FieldElement& c) { return a *= c; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Human-readable form in variable `var`, highest power first.
  std::string to_string(char var = 'x') const;

 private:
  void trim();

  FieldSpec spec_;
  std::vector<FieldElement> coeffs_;
};

UniPoly pow(const UniPoly& base, unsigned exponent);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// a = q*b + r with r = 0 or deg r < deg b. Throws kDivisionByZero when b = 0.
DivMod divmod(const UniPoly& a, const UniPoly& b);

/// a / b, throwing kInexactDivision if the remainder is non-zero.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// Monic gcd. gcd(a, 0) is monic(a); throws kBothZero when a = b = 0.
UniPoly gcd_monic(const UniPoly& a, const UniPoly& b);

/// Multiplicity of c as a root of p (0 when p(c) != 0). Throws
/// kZeroPolynomial on p = 0.
int ord_at(const UniPoly& p, const FieldElement& c);

struct RootMultiplicity {
  FieldElement root;
  int multiplicity;

  friend bool operator==(const RootMultiplicity&,
                         const RootMultiplicity&) = default;
};

/// Roots of p in the ground field with multiplicities, in increasing order.
///
/// GF(p) scans every residue. Over Q the square-free part is cleared to a
/// primitive integer polynomial whose roots modulo a good prime are
/// Newton-lifted past the Cauchy bound and rationally reconstructed; every
/// candidate is confirmed by exact evaluation. Throws kZeroPolynomial.
std::vector<RootMultiplicity> roots_in_field(const UniPoly& p);

/// Sum of ord_a(g) over the roots a of g in the algebraic closure that are
/// also roots of h. Computed by repeatedly stripping gcd(m, h) from m = g.
/// Throws kZeroPolynomial when g = 0.
int supported_part_degree(const UniPoly& g, const UniPoly& h);

}  // namespace labatie
