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

#include "labatie/oracle.hpp"

#include <stdexcept>

#include "labatie/error.hpp"
#include "labatie/parser.hpp"

namespace labatie::oracle {
namespace {

// Monomials x^i y^j with i + j < order, graded.
std::size_t monomial_index(int i, int j) {
  const int total = i + j;
  return static_cast<std::size_t>(total * (total + 1) / 2 + j);
}

std::size_t ambient_size(int order) {
  return static_cast<std::size_t>(order * (order + 1) / 2);
}

void append_rows(const BiPoly& f, int order, int multiplier_degrees,
                 std::vector<std::vector<FieldElement>>& rows) {
  const FieldSpec& spec = f.spec();
  const std::size_t width = ambient_size(order);
  for (int deg = 0; deg < multiplier_degrees; ++deg) {
    for (int t = 0; t <= deg; ++t) {
      const int s = deg - t;  // multiplier x^s y^t
      std::vector<FieldElement> row(width, FieldElement::zero(spec));
      bool any = false;
      for (int j = 0; j <= f.deg_y(); ++j) {
        const UniPoly c = f.coeff(j);
        for (int i = 0; i <= c.degree(); ++i) {
          if (i + s + j + t >= order) break;
          const FieldElement a = c.coeff(i);
          if (a.is_zero()) continue;
          row[monomial_index(i + s, j + t)] += a;
          any = true;
        }
      }
      if (any) rows.push_back(std::move(row));
    }
  }
}

int dimension(const LocalAlgebraInstance& inst, int multiplier_degrees) {
  if (inst.order < 1) {
    throw std::invalid_argument("truncation order must be positive");
  }
  std::vector<std::vector<FieldElement>> rows;
  append_rows(inst.v, inst.order, multiplier_degrees, rows);
  append_rows(inst.w, inst.order, multiplier_degrees, rows);
  return static_cast<int>(ambient_size(inst.order)) -
         matrix_rank(std::move(rows));
}

}  // namespace

std::vector<Point> brute_force_zeros(const BiPoly& v, const BiPoly& w) {
  const FieldSpec& spec = v.spec();
  if (!spec.is_prime_field() || !(w.spec() == spec)) {
    throw Error(ErrorCode::kFieldMismatch,
                "brute-force enumeration needs both inputs over GF(p)");
  }
  std::vector<Point> out;
  for (std::uint32_t a = 0; a < spec.modulus(); ++a) {
    const FieldElement fa(spec, static_cast<long>(a));
    const UniPoly sv = section_at(v, fa);
    const UniPoly sw = section_at(w, fa);
    for (std::uint32_t b = 0; b < spec.modulus(); ++b) {
      const FieldElement fb(spec, static_cast<long>(b));
      if (sv.eval(fb).is_zero() && sw.eval(fb).is_zero()) {
        out.emplace_back(fa, fb);
      }
    }
  }
  return out;
}

LocalAlgebraInstance make_instance(const BiPoly& v, const BiPoly& w,
                                   const FieldElement& a, const FieldElement& b,
                                   int order) {
  return {v.shift(a, b), w.shift(a, b), order, {a, b}};
}

int local_dimension(const LocalAlgebraInstance& inst) {
  return dimension(inst, inst.order);
}

int local_dimension_with_extra_multipliers(const LocalAlgebraInstance& inst,
                                           int extra_degrees) {
  return dimension(inst, inst.order + extra_degrees);
}

int oracle_multiplicity(const BiPoly& v, const BiPoly& w, const FieldElement& a,
                        const FieldElement& b) {
  const BiPoly common = bivariate_gcd(v, w);
  if (eval_point(common, a, b).is_zero()) {
    throw Error(ErrorCode::kInfiniteMultiplicity,
                "common factor " + format_poly(common) + " vanishes at (" +
                    a.to_string() + ", " + b.to_string() + ")");
  }
  LocalAlgebraInstance inst = make_instance(v, w, a, b, 1);
  int previous = local_dimension(inst);
  for (int order = 2; order <= kMaxOrder; ++order) {
    inst.order = order;
    const int current = local_dimension(inst);
    if (current < previous) {
      throw std::logic_error("local dimension decreased with the order");
    }
    // dim_N == dim_{N+1} forces m^N into the ideal locally (Nakayama).
    if (current == previous) return current;
    previous = current;
  }
  throw Error(ErrorCode::kCapExceeded,
              "local dimension did not stabilize by order " +
                  std::to_string(kMaxOrder));
}

int matrix_rank(std::vector<std::vector<FieldElement>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const FieldElement inv = rows[rank][c].inverse();
    for (std::size_t k = c; k < cols; ++k) rows[rank][k] *= inv;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const FieldElement factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!rows[rank][k].is_zero()) rows[r][k] -= factor * rows[rank][k];
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace labatie::oracle
