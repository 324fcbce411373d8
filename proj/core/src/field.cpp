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

#include "labatie/field.hpp"

#include "labatie/error.hpp"

namespace labatie {
namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidModulus,
                std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(FieldKind::kPrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  if (kind_ == FieldKind::kRationals) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

FieldElement::FieldElement(const FieldSpec& spec) : spec_(spec) {
  if (spec.is_prime_field()) {
    value_ = std::uint32_t{0};
  } else {
    value_ = mpq_class(0);
  }
}

FieldElement::FieldElement(const FieldSpec& spec, long value) : spec_(spec) {
  if (spec.is_prime_field()) {
    value_ = reduce(mpz_class(value), spec.modulus());
  } else {
    value_ = mpq_class(value);
  }
}

FieldElement::FieldElement(const FieldSpec& spec, const mpq_class& value)
    : spec_(spec) {
  if (!spec.is_prime_field()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
    return;
  }
  if (value.get_den() != 1) {
    mpq_class q = value;
    q.canonicalize();
    if (q.get_den() != 1) {
      throw Error(
          ErrorCode::kModulusMismatch,
          "fractional value " + q.get_str() + " in " + spec.to_string());
    }
    value_ = reduce(q.get_num(), spec.modulus());
    return;
  }
  value_ = reduce(value.get_num(), spec.modulus());
}

bool FieldElement::is_zero() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& FieldElement::rational() const {
  if (spec_.is_prime_field()) {
    throw Error(ErrorCode::kFieldMismatch, "rational() on a prime field");
  }
  return std::get<mpq_class>(value_);
}

std::uint32_t FieldElement::residue() const {
  if (!spec_.is_prime_field()) {
    throw Error(ErrorCode::kFieldMismatch, "residue() over Q");
  }
  return std::get<std::uint32_t>(value_);
}

void FieldElement::check_same_field(const FieldElement& other) const {
  if (!(spec_ == other.spec_)) {
    throw Error(ErrorCode::kFieldMismatch,
                spec_.to_string() + " vs " + other.spec_.to_string());
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement out(spec_);
  if (spec_.is_prime_field()) {
    std::uint32_t r = std::get<std::uint32_t>(value_);
    out.value_ = r == 0 ? 0U : spec_.modulus() - r;
  } else {
    out.value_ = mpq_class(-std::get<mpq_class>(value_));
  }
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  }
  FieldElement out(spec_);
  if (spec_.is_prime_field()) {
    out.value_ = pow_mod(std::get<std::uint32_t>(value_), spec_.modulus() - 2,
                         spec_.modulus());
  } else {
    out.value_ = mpq_class(1 / std::get<mpq_class>(value_));
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (spec_.is_prime_field()) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} +
                      std::get<std::uint32_t>(rhs.value_);
    value_ = static_cast<std::uint32_t>(s % spec_.modulus());
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (spec_.is_prime_field()) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} +
                      spec_.modulus() - std::get<std::uint32_t>(rhs.value_);
    value_ = static_cast<std::uint32_t>(s % spec_.modulus());
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (spec_.is_prime_field()) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} *
                      std::get<std::uint32_t>(rhs.value_);
    value_ = static_cast<std::uint32_t>(s % spec_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.spec_ == b.spec_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  if (a.spec_.is_prime_field()) {
    return std::get<std::uint32_t>(a.value_) <=>
           std::get<std::uint32_t>(b.value_);
  }
  int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0   ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
  if (spec_.is_prime_field()) {
    return std::to_string(std::get<std::uint32_t>(value_));
  }
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace labatie
