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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace labatie {

enum class FieldKind { kRationals, kPrimeField };

/// The ground field K: either Q or GF(p) for a prime p < 2^31.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::kRationals, 0); }
  /// Throws Error(kInvalidModulus) unless `p` is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept {
    return kind_ == FieldKind::kPrimeField;
  }
  /// Zero for Q.
  std::uint32_t modulus() const noexcept { return modulus_; }

  /// "Q" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint32_t modulus)
      : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Exact scalar in Q (reduced mpq) or GF(p) (residue in [0, p)).
///
/// Mixing elements of different fields throws Error(kFieldMismatch).
class FieldElement {
 public:
  explicit FieldElement(const FieldSpec& spec);
  FieldElement(const FieldSpec& spec, long value);
  /// Rationals: canonicalized. Prime field: reduced modulo p; throws
  /// kModulusMismatch when `value` is not an integer.
  FieldElement(const FieldSpec& spec, const mpq_class& value);

  static FieldElement zero(const FieldSpec& spec) { return FieldElement(spec); }
  static FieldElement one(const FieldSpec& spec) {
    return FieldElement(spec, 1L);
  }

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  /// Valid only over Q.
  const mpq_class& rational() const;
  /// Valid only over GF(p).
  std::uint32_t residue() const;

  FieldElement operator-() const;
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) {
    return lhs += rhs;
  }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) {
    return lhs -= rhs;
  }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) {
    return lhs *= rhs;
  }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Numeric order over Q, residue order over GF(p). Used for deterministic
  /// output ordering only.
  friend std::strong_ordering operator<=>(const FieldElement& a,
                                          const FieldElement& b);

  /// "3", "-1/2" over Q; residue over GF(p).
  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& other) const;

  FieldSpec spec_;
  std::variant<mpq_class, std::uint32_t> value_;
};

}  // namespace labatie
