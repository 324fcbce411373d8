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

#include "labatie/unipoly.hpp"

#include <algorithm>
#include <utility>

#include "labatie/error.hpp"

namespace labatie {

UniPoly::UniPoly(const FieldSpec& spec, std::vector<FieldElement> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.spec() == spec_)) {
      throw Error(ErrorCode::kFieldMismatch,
                  "coefficient in " + c.spec().to_string() + " for a " +
                      spec_.to_string() + " polynomial");
    }
  }
  trim();
}

UniPoly::UniPoly(const FieldSpec& spec, std::initializer_list<long> coeffs)
    : spec_(spec) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(spec, c);
  trim();
}

UniPoly UniPoly::constant(const FieldElement& c) {
  return UniPoly(c.spec(), std::vector<FieldElement>{c});
}

UniPoly UniPoly::monomial(const FieldElement& c, int degree) {
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(degree) + 1,
                                   FieldElement::zero(c.spec()));
  coeffs.back() = c;
  return UniPoly(c.spec(), std::move(coeffs));
}

UniPoly UniPoly::linear_root(const FieldElement& c) {
  return UniPoly(c.spec(), {-c, FieldElement::one(c.spec())});
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement UniPoly::coeff(int j) const {
  if (j < 0 || j > degree()) return FieldElement::zero(spec_);
  return coeffs_[static_cast<std::size_t>(j)];
}

const FieldElement& UniPoly::leading_coeff() const {
  if (is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "leading coefficient of zero");
  }
  return coeffs_.back();
}

FieldElement UniPoly::eval(const FieldElement& t) const {
  FieldElement acc = FieldElement::zero(spec_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return *this * leading_coeff().inverse();
}

UniPoly UniPoly::derivative() const {
  std::vector<FieldElement> out;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    out.push_back(coeffs_[j] * FieldElement(spec_, static_cast<long>(j)));
  }
  return UniPoly(spec_, std::move(out));
}

UniPoly UniPoly::shift(const FieldElement& c) const {
  // Horner in (t + c).
  UniPoly acc(spec_);
  const UniPoly t_plus_c(spec_, {c, FieldElement::one(spec_)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t_plus_c + constant(*it);
  }
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (!(spec_ == rhs.spec_)) {
    throw Error(ErrorCode::kFieldMismatch, "adding polynomials over " +
                                               spec_.to_string() + " and " +
                                               rhs.spec_.to_string());
  }
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(spec_));
  }
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
    coeffs_[j] += rhs.coeffs_[j];
  }
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) { return *this += -rhs; }

UniPoly& UniPoly::operator*=(const FieldElement& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (!(a.spec_ == b.spec_)) {
    throw Error(ErrorCode::kFieldMismatch, "multiplying polynomials over " +
                                               a.spec_.to_string() + " and " +
                                               b.spec_.to_string());
  }
  if (a.is_zero() || b.is_zero()) return UniPoly(a.spec_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                FieldElement::zero(a.spec_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(a.spec_, std::move(out));
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = degree(); j >= 0; --j) {
    const FieldElement& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    bool negative = !s.empty() && s[0] == '-';
    if (negative) s.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (j == 0) {
      out += s;
      continue;
    }
    if (s != "1") out += s + "*";
    out += var;
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out;
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result = UniPoly::constant(FieldElement::one(base.spec()));
  UniPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  }
  if (!(a.spec() == b.spec())) {
    throw Error(ErrorCode::kFieldMismatch, "divmod across fields");
  }
  const FieldSpec& spec = a.spec();
  if (a.degree() < b.degree()) return {UniPoly(spec), a};

  std::vector<FieldElement> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<FieldElement> quot(
      static_cast<std::size_t>(a.degree() - b.degree() + 1),
      FieldElement::zero(spec));
  const FieldElement lc_inv = b.leading_coeff().inverse();
  const auto bc = b.coeffs();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    FieldElement& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    FieldElement factor = top * lc_inv;
    const int shift = k - db;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(shift + j)] -=
          factor * bc[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(shift)] = std::move(factor);
  }
  rem.erase(rem.begin() + db, rem.end());
  return {UniPoly(spec, std::move(quot)), UniPoly(spec, std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) {
    throw Error(ErrorCode::kInexactDivision,
                "(" + a.to_string() + ") / (" + b.to_string() + ")");
  }
  return std::move(qr.quotient);
}

UniPoly gcd_monic(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::kBothZero, "gcd(0, 0) is undefined");
  }
  UniPoly r0 = a;
  UniPoly r1 = b;
  while (!r1.is_zero()) {
    UniPoly r2 = divmod(r0, r1).remainder;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

int ord_at(const UniPoly& p, const FieldElement& c) {
  if (p.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "ord of the zero polynomial");
  }
  // Synthetic division by (t - c) while the remainder vanishes.
  std::vector<FieldElement> cur(p.coeffs().begin(), p.coeffs().end());
  int order = 0;
  while (cur.size() > 1) {
    std::vector<FieldElement> quot(cur.size() - 1,
                                   FieldElement::zero(c.spec()));
    FieldElement acc = cur.back();
    for (std::size_t j = cur.size() - 1; j-- > 0;) {
      quot[j] = acc;
      acc = acc * c + cur[j];
    }
    if (!acc.is_zero()) break;
    ++order;
    cur = std::move(quot);
  }
  return order;
}

namespace {

std::vector<RootMultiplicity> roots_prime_field(const UniPoly& p) {
  std::vector<RootMultiplicity> roots;
  const FieldSpec& spec = p.spec();
  for (std::uint32_t r = 0; r < spec.modulus(); ++r) {
    FieldElement c(spec, static_cast<long>(r));
    if (p.eval(c).is_zero()) roots.push_back({c, ord_at(p, c)});
  }
  return roots;
}

mpz_class eval_mod(const std::vector<mpz_class>& f, const mpz_class& t,
                   const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * t + *it;
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

// Primitive integer polynomial with the same roots as the square-free `p`.
std::vector<mpz_class> integer_form(const UniPoly& p) {
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.rational().get_den_mpz_t());
  }
  std::vector<mpz_class> f;
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) {
    mpq_class scaled = c.rational() * den_lcm;
    f.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), f.back().get_mpz_t());
  }
  for (auto& c : f) c /= content;
  return f;
}

// A prime q not dividing the leading coefficient such that f mod q stays
// square-free; such q exist because f is square-free over Q.
std::uint32_t good_prime(const std::vector<mpz_class>& f) {
  for (std::uint32_t q = 101;; q += 2) {
    if (!is_prime(q)) continue;
    FieldSpec gf = FieldSpec::prime(q);
    std::vector<FieldElement> coeffs;
    for (const auto& c : f) coeffs.emplace_back(gf, mpq_class(c));
    UniPoly fq(gf, std::move(coeffs));
    if (fq.degree() != static_cast<int>(f.size()) - 1) continue;
    if (gcd_monic(fq, fq.derivative()).degree() == 0) return q;
  }
}

std::vector<FieldElement> simple_rational_roots(const UniPoly& squarefree) {
  const FieldSpec& spec = squarefree.spec();
  const std::vector<mpz_class> f = integer_form(squarefree);
  std::vector<mpz_class> df;
  for (std::size_t j = 1; j < f.size(); ++j) df.push_back(f[j] * j);

  // lc * root is an integer bounded by |lc| + max |a_i| (Cauchy).
  const mpz_class& lc = f.back();
  mpz_class max_coeff = 0;
  for (std::size_t j = 0; j + 1 < f.size(); ++j) {
    max_coeff = std::max<mpz_class>(max_coeff, abs(f[j]));
  }
  const mpz_class bound = 2 * (abs(lc) + max_coeff) + 1;

  const std::uint32_t q = good_prime(f);
  std::vector<FieldElement> roots;
  for (std::uint32_t r = 0; r < q; ++r) {
    if (eval_mod(f, r, q) != 0) continue;
    // Quadratic Newton lifting of the simple root r.
    mpz_class alpha = r;
    mpz_class modulus = q;
    while (modulus <= bound) {
      modulus *= modulus;
      mpz_class inv = eval_mod(df, alpha, modulus);
      mpz_invert(inv.get_mpz_t(), inv.get_mpz_t(), modulus.get_mpz_t());
      alpha -= eval_mod(f, alpha, modulus) * inv;
      mpz_fdiv_r(alpha.get_mpz_t(), alpha.get_mpz_t(), modulus.get_mpz_t());
    }
    mpz_class num = lc * alpha;
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), modulus.get_mpz_t());
    if (2 * num > modulus) num -= modulus;
    FieldElement candidate(spec, mpq_class(num, lc));
    if (squarefree.eval(candidate).is_zero()) {
      roots.push_back(std::move(candidate));
    }
  }
  return roots;
}

std::vector<RootMultiplicity> roots_rationals(const UniPoly& p) {
  std::vector<RootMultiplicity> roots;
  if (p.degree() <= 0) return roots;
  const UniPoly squarefree = exact_div(p, gcd_monic(p, p.derivative()));
  for (auto& r : simple_rational_roots(squarefree)) {
    int m = ord_at(p, r);
    roots.push_back({std::move(r), m});
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.root < b.root; });
  return roots;
}

}  // namespace

std::vector<RootMultiplicity> roots_in_field(const UniPoly& p) {
  if (p.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "roots of the zero polynomial");
  }
  if (p.spec().is_prime_field()) return roots_prime_field(p);
  return roots_rationals(p);
}

int supported_part_degree(const UniPoly& g, const UniPoly& h) {
  if (g.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "supported part of zero");
  }
  UniPoly m = g;
  UniPoly t = gcd_monic(m, h);
  while (t.degree() > 0) {
    m = exact_div(m, t);
    t = gcd_monic(m, h);
  }
  return g.degree() - m.degree();
}

}  // namespace labatie
