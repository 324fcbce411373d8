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

#include "labatie/bipoly.hpp"

#include <algorithm>
#include <utility>

#include "labatie/error.hpp"

namespace labatie {

BiPoly::BiPoly(const FieldSpec& spec, std::vector<UniPoly> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.spec() == spec_)) {
      throw Error(ErrorCode::kFieldMismatch,
                  "y-coefficient over " + c.spec().to_string() + " in a " +
                      spec_.to_string() + " polynomial");
    }
  }
  trim();
}

BiPoly::BiPoly(const UniPoly& c) : spec_(c.spec()) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

BiPoly BiPoly::one(const FieldSpec& spec) { return BiPoly(UniPoly(spec, {1})); }

BiPoly BiPoly::x(const FieldSpec& spec) {
  return BiPoly(UniPoly(spec, {0, 1}));
}

BiPoly BiPoly::y(const FieldSpec& spec) {
  return BiPoly(spec, {UniPoly(spec), UniPoly(spec, {1})});
}

BiPoly BiPoly::monomial(const FieldElement& c, int i, int j) {
  std::vector<UniPoly> coeffs(static_cast<std::size_t>(j) + 1,
                              UniPoly(c.spec()));
  coeffs.back() = UniPoly::monomial(c, i);
  return BiPoly(c.spec(), std::move(coeffs));
}

void BiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int BiPoly::deg_x() const noexcept {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

UniPoly BiPoly::coeff(int j) const {
  if (j < 0 || j > deg_y()) return UniPoly(spec_);
  return coeffs_[static_cast<std::size_t>(j)];
}

const UniPoly& BiPoly::lc_y() const {
  if (is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "leading y-coefficient of zero");
  }
  return coeffs_.back();
}

BiPoly BiPoly::shift(const FieldElement& a, const FieldElement& b) const {
  // Shift every coefficient in x, then Horner in (y + b).
  const BiPoly y_plus_b(spec_, {UniPoly::constant(b), UniPoly(spec_, {1})});
  BiPoly acc(spec_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * y_plus_b + BiPoly(it->shift(a));
  }
  return acc;
}

BiPoly BiPoly::shift_y(int k) const {
  if (is_zero()) return *this;
  std::vector<UniPoly> out(static_cast<std::size_t>(k), UniPoly(spec_));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return BiPoly(spec_, std::move(out));
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (!(spec_ == rhs.spec_)) {
    throw Error(ErrorCode::kFieldMismatch, "adding across fields");
  }
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), UniPoly(spec_));
  }
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
    coeffs_[j] += rhs.coeffs_[j];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) { return *this += -rhs; }

BiPoly& BiPoly::operator*=(const UniPoly& c) {
  for (auto& a : coeffs_) a = a * c;
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (!(a.spec_ == b.spec_)) {
    throw Error(ErrorCode::kFieldMismatch, "multiplying across fields");
  }
  if (a.is_zero() || b.is_zero()) return BiPoly(a.spec_);
  std::vector<UniPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                           UniPoly(a.spec_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return BiPoly(a.spec_, std::move(out));
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result = BiPoly::one(base.spec());
  BiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

UniPoly y_content(const BiPoly& w) {
  if (w.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "y-content of zero");
  }
  UniPoly g(w.spec());
  for (const auto& c : w.coeffs()) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_monic(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly y_primitive_part(const BiPoly& w) { return exact_div(w, y_content(w)); }

BiPoly exact_div(const BiPoly& w, const UniPoly& c) {
  if (c.degree() == 0 && c.leading_coeff().is_one()) return w;
  std::vector<UniPoly> out;
  out.reserve(w.coeffs().size());
  for (const auto& a : w.coeffs()) out.push_back(exact_div(a, c));
  return BiPoly(w.spec(), std::move(out));
}

PseudoDivision pseudo_divide(const BiPoly& w, const BiPoly& v) {
  const int dv = v.deg_y();
  const int dw = w.deg_y();
  if (dv <= 0 || dv > dw) {
    throw Error(ErrorCode::kDegreeOrder,
                "pseudo-division needs 0 < deg_y V <= deg_y W, got deg_y V = " +
                    std::to_string(dv) + ", deg_y W = " + std::to_string(dw));
  }
  const FieldSpec& spec = w.spec();
  const UniPoly& lc = v.lc_y();
  const auto vc = v.coeffs();

  // Classical pseudo-division: at each step scale the running remainder by
  // lc and cancel its top term. Multiplier ends up lc^(dw - dv + 1).
  std::vector<UniPoly> rem(w.coeffs().begin(), w.coeffs().end());
  std::vector<UniPoly> quot(static_cast<std::size_t>(dw - dv + 1),
                            UniPoly(spec));
  for (int k = dw; k >= dv; --k) {
    const UniPoly top = rem[static_cast<std::size_t>(k)];
    for (auto& q : quot) q = q * lc;
    for (int j = 0; j < k; ++j) {
      rem[static_cast<std::size_t>(j)] = rem[static_cast<std::size_t>(j)] * lc;
    }
    rem[static_cast<std::size_t>(k)] = UniPoly(spec);
    quot[static_cast<std::size_t>(k - dv)] = top;
    if (top.is_zero()) continue;
    const int s = k - dv;
    for (int j = 0; j < dv; ++j) {
      rem[static_cast<std::size_t>(s + j)] -=
          top * vc[static_cast<std::size_t>(j)];
    }
  }
  rem.erase(rem.begin() + dv, rem.end());
  return {pow(lc, static_cast<unsigned>(dw - dv + 1)),
          BiPoly(spec, std::move(quot)), BiPoly(spec, std::move(rem))};
}

UniPoly section_at(const BiPoly& w, const FieldElement& a) {
  std::vector<FieldElement> out;
  out.reserve(w.coeffs().size());
  for (const auto& c : w.coeffs()) out.push_back(c.eval(a));
  return UniPoly(w.spec(), std::move(out));
}

FieldElement eval_point(const BiPoly& w, const FieldElement& a,
                        const FieldElement& b) {
  FieldElement acc = FieldElement::zero(w.spec());
  const auto coeffs = w.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= b;
    acc += it->eval(a);
  }
  return acc;
}

BiPoly make_monic(const BiPoly& w) {
  if (w.is_zero()) return w;
  const FieldElement inv = w.lc_y().leading_coeff().inverse();
  return w * UniPoly::constant(inv);
}

BiPoly bivariate_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::kBothZero, "gcd(0, 0) is undefined");
  }
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  const UniPoly content = gcd_monic(y_content(a), y_content(b));
  BiPoly p0 = y_primitive_part(a);
  BiPoly p1 = y_primitive_part(b);
  if (p0.deg_y() < p1.deg_y()) std::swap(p0, p1);
  while (p1.deg_y() > 0) {
    BiPoly r = pseudo_divide(p0, p1).remainder;
    p0 = std::move(p1);
    if (r.is_zero()) {
      return make_monic(p0 * content);
    }
    p1 = y_primitive_part(r);
  }
  // p1 has y-degree 0 and is primitive, i.e. a unit.
  return BiPoly(content);
}

}  // namespace labatie
