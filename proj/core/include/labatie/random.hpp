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

#include <optional>
#include <random>
#include <utility>

#include "labatie/bipoly.hpp"
#include "labatie/field.hpp"
#include "labatie/unipoly.hpp"

namespace labatie::random {

using Rng = std::mt19937_64;

/// Uniform residue over GF(p); over Q an integer in [-bound, bound], or a
/// fraction with denominator up to 3 about one time in four.
FieldElement element(const FieldSpec& spec, Rng& rng, long bound = 3);

/// Degree at most `max_degree` (may be lower, may be zero).
UniPoly unipoly(const FieldSpec& spec, Rng& rng, int max_degree,
                long bound = 3);

/// deg_y exactly `deg_y`, each y-coefficient of x-degree <= max_deg_x.
BiPoly bipoly(const FieldSpec& spec, Rng& rng, int deg_y, int max_deg_x,
              long bound = 3);

struct PairOptions {
  int max_deg_y = 4;
  int max_deg_x = 3;
  long bound = 3;
  /// Subtract constants so both polynomials vanish at a random point;
  /// used over Q, where common zeros are otherwise rare.
  bool plant_point = false;
};

struct Pair {
  BiPoly first;
  BiPoly second;
  std::optional<std::pair<FieldElement, FieldElement>> planted;
};

/// A pair of y-primitive polynomials of positive y-degree on which the
/// elimination succeeds (coprime); resamples until one is found.
Pair coprime_pair(const FieldSpec& spec, Rng& rng, const PairOptions& opts);

}  // namespace labatie::random
