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

#include "labatie/parser.hpp"

#include <cctype>

#include "labatie/error.hpp"

namespace labatie {
namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, const FieldSpec& spec)
      : text_(text), spec_(spec) {}

  BiPoly parse_all() {
    BiPoly result = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) {
      fail("expected '+', '-', '*', '^' or end of input, found '" +
           std::string(1, text_[pos_]) + "'");
    }
    return result;
  }

  FieldElement parse_signed_scalar() {
    skip_ws();
    bool negative = accept('-');
    FieldElement value = parse_number();
    skip_ws();
    if (pos_ < text_.size()) fail("expected end of scalar literal");
    return negative ? -value : value;
  }

 private:
  [[noreturn]] void fail(const std::string& message,
                         ErrorCode code = ErrorCode::kSyntaxError) const {
    throw ParseError(code, pos_, message);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  BiPoly parse_expr() {
    bool negate = accept('-');
    BiPoly acc = parse_term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        bool neg = accept('-');
        BiPoly t = parse_term();
        acc = neg ? acc - t : acc + t;
      } else if (accept('-')) {
        bool neg = accept('-');
        BiPoly t = parse_term();
        acc = neg ? acc + t : acc - t;
      } else {
        return acc;
      }
    }
  }

  BiPoly parse_term() {
    BiPoly acc = parse_factor();
    while (accept('*')) acc = acc * parse_factor();
    return acc;
  }

  BiPoly parse_factor() {
    BiPoly base = parse_base();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      fail("exponents must be non-negative", ErrorCode::kNegativeExponent);
    }
    mpz_class e = parse_digits("exponent digits");
    if (e > kMaxExponent) {
      fail("exponent exceeds " + std::to_string(kMaxExponent));
    }
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }

  BiPoly parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) {
      fail("expected 'x', 'y', a number or '(', found end of input");
    }
    char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return BiPoly::x(spec_);
    }
    if (c == 'y') {
      ++pos_;
      return BiPoly::y(spec_);
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return BiPoly(UniPoly::constant(parse_number()));
    }
    fail("expected 'x', 'y', a number or '(', found '" + std::string(1, c) +
         "'");
  }

  mpz_class parse_digits(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail(std::string("expected ") + what);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  FieldElement parse_number() {
    std::size_t start = pos_;
    mpz_class num = parse_digits("a number");
    if (!accept('/')) {
      return FieldElement(spec_, mpq_class(num));
    }
    mpz_class den = parse_digits("denominator digits");
    if (den == 0) {
      pos_ = start;
      fail("zero denominator", ErrorCode::kZeroDenominator);
    }
    if (spec_.is_prime_field()) {
      pos_ = start;
      fail("fraction literals are not allowed over " + spec_.to_string(),
           ErrorCode::kModulusMismatch);
    }
    return FieldElement(spec_, mpq_class(num, den));
  }

  std::string_view text_;
  FieldSpec spec_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(const PolySource& src) {
  return parse_poly(src.text, src.spec);
}

BiPoly parse_poly(std::string_view text, const FieldSpec& spec) {
  return Parser(text, spec).parse_all();
}

FieldElement parse_scalar(std::string_view text, const FieldSpec& spec) {
  return Parser(text, spec).parse_signed_scalar();
}

std::string format_poly(const BiPoly& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (int j = w.deg_y(); j >= 0; --j) {
    const UniPoly c = w.coeff(j);
    for (int i = c.degree(); i >= 0; --i) {
      const FieldElement a = c.coeff(i);
      if (a.is_zero()) continue;
      std::string s = a.to_string();
      const bool negative = s[0] == '-';
      if (negative) s.erase(0, 1);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono;
      if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
      if (j > 0) {
        if (!mono.empty()) mono += "*";
        mono += j == 1 ? "y" : "y^" + std::to_string(j);
      }
      if (mono.empty()) {
        out += s;
      } else if (s == "1") {
        out += mono;
      } else {
        out += s + "*" + mono;
      }
    }
  }
  return out;
}

}  // namespace labatie
