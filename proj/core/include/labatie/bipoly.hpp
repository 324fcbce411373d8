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
#include <vector>

#include "labatie/field.hpp"
#include "labatie/unipoly.hpp"

namespace labatie {

/// Polynomial in K[x][y], dense in y: coefficient j is the UniPoly in x
/// multiplying y^j. Zero has no coefficients; otherwise the leading
/// y-coefficient is non-zero.
class BiPoly {
 public:
  explicit BiPoly(const FieldSpec& spec) : spec_(spec) {}
  BiPoly(const FieldSpec& spec, std::vector<UniPoly> coeffs);
  /// The polynomial c(x), of y-degree 0.
  explicit BiPoly(const UniPoly& c);

  static BiPoly one(const FieldSpec& spec);
  static BiPoly x(const FieldSpec& spec);
  static BiPoly y(const FieldSpec& spec);
  /// c * x^i * y^j.
  static BiPoly monomial(const FieldElement& c, int i, int j);

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for zero.
  int deg_y() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Largest x-degree among the y-coefficients; -1 for zero.
  int deg_x() const noexcept;
  std::span<const UniPoly> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of y^j; zero beyond deg_y.
  UniPoly coeff(int j) const;
  /// Leading y-coefficient. Throws kZeroPolynomial on zero.
  const UniPoly& lc_y() const;
  /// The y^0 coefficient as a univariate polynomial in x.
  UniPoly constant_term() const { return coeff(0); }

  /// W(x + a, y + b).
  BiPoly shift(const FieldElement& a, const FieldElement& b) const;
  /// Multiplies by y^k.
  BiPoly shift_y(int k) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const UniPoly& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const UniPoly& c) { return a *= c; }
  friend BiPoly operator*(const UniPoly& c, BiPoly a) { return a *= c; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void trim();

  FieldSpec spec_;
  std::vector<UniPoly> coeffs_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

/// Monic gcd in K[x] of the y-coefficients. Throws kZeroPolynomial.
UniPoly y_content(const BiPoly& w);

/// w / y_content(w). Throws kZeroPolynomial.
BiPoly y_primitive_part(const BiPoly& w);

/// Coefficient-wise exact division by c(x); throws kInexactDivision.
BiPoly exact_div(const BiPoly& w, const UniPoly& c);

struct PseudoDivision {
  UniPoly multiplier;  // u = lc_y(V)^(deg_y W - deg_y V + 1)
  BiPoly quotient;
  BiPoly remainder;
};

/// u*W = Q*V + R with R = 0 or deg_y R < deg_y V. Requires
/// 0 < deg_y V <= deg_y W, else throws kDegreeOrder.
PseudoDivision pseudo_divide(const BiPoly& w, const BiPoly& v);

/// W(a, y) as a univariate polynomial in y.
UniPoly section_at(const BiPoly& w, const FieldElement& a);

/// Exact value W(a, b).
FieldElement eval_point(const BiPoly& w, const FieldElement& a,
                        const FieldElement& b);

/// Normalizes a non-zero BiPoly so that the leading x-coefficient of its
/// leading y-coefficient is 1.
BiPoly make_monic(const BiPoly& w);

/// gcd in K[x, y] up to a unit, normalized by make_monic. Computed as the gcd
/// of the y-contents times the last non-zero term of a primitive remainder
/// sequence. Throws kBothZero when both inputs vanish.
BiPoly bivariate_gcd(const BiPoly& a, const BiPoly& b);

}  // namespace labatie
