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

#include "labatie/random.hpp"

#include <vector>

#include "labatie/elimination.hpp"

namespace labatie::random {
namespace {

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

FieldElement element(const FieldSpec& spec, Rng& rng, long bound) {
  if (spec.is_prime_field()) {
    return FieldElement(spec, uniform(rng, 0, spec.modulus() - 1L));
  }
  const long num = uniform(rng, -bound, bound);
  const long den = uniform(rng, 0, 3) == 0 ? uniform(rng, 2, 3) : 1;
  return FieldElement(spec, mpq_class(num, den));
}

UniPoly unipoly(const FieldSpec& spec, Rng& rng, int max_degree, long bound) {
  std::vector<FieldElement> coeffs;
  const int degree = static_cast<int>(uniform(rng, 0, max_degree));
  for (int i = 0; i <= degree; ++i) coeffs.push_back(element(spec, rng, bound));
  return UniPoly(spec, std::move(coeffs));
}

BiPoly bipoly(const FieldSpec& spec, Rng& rng, int deg_y, int max_deg_x,
              long bound) {
  std::vector<UniPoly> coeffs;
  for (int j = 0; j <= deg_y; ++j) {
    UniPoly c = unipoly(spec, rng, max_deg_x, bound);
    while (j == deg_y && c.is_zero()) c = unipoly(spec, rng, max_deg_x, bound);
    coeffs.push_back(std::move(c));
  }
  return BiPoly(spec, std::move(coeffs));
}

Pair coprime_pair(const FieldSpec& spec, Rng& rng, const PairOptions& opts) {
  while (true) {
    const int da = static_cast<int>(uniform(rng, 1, opts.max_deg_y));
    const int db = static_cast<int>(uniform(rng, 1, opts.max_deg_y));
    BiPoly a = bipoly(spec, rng, da, opts.max_deg_x, opts.bound);
    BiPoly b = bipoly(spec, rng, db, opts.max_deg_x, opts.bound);
    Pair pair{a, b, std::nullopt};
    if (opts.plant_point) {
      FieldElement px = element(spec, rng, opts.bound);
      FieldElement py = element(spec, rng, opts.bound);
      a -= BiPoly(UniPoly::constant(eval_point(a, px, py)));
      b -= BiPoly(UniPoly::constant(eval_point(b, px, py)));
      pair.planted = std::make_pair(px, py);
    }
    if (a.deg_y() < 1 || b.deg_y() < 1) continue;
    a = y_primitive_part(a);
    b = y_primitive_part(b);
    if (pair.planted &&
        (!eval_point(a, pair.planted->first, pair.planted->second).is_zero() ||
         !eval_point(b, pair.planted->first, pair.planted->second).is_zero())) {
      continue;
    }
    pair.first = a;
    pair.second = b;
    try {
      eliminate(a, b);
    } catch (const Error&) {
      continue;
    }
    return pair;
  }
}

}  // namespace labatie::random
