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

#include <utility>
#include <vector>

#include "labatie/bipoly.hpp"
#include "labatie/field.hpp"

// Ground truth that does not go through the elimination engine: exhaustive
// zero enumeration over GF(p) and intersection multiplicity computed as the
// dimension of a truncated local algebra.

namespace labatie::oracle {

using Point = std::pair<FieldElement, FieldElement>;

/// Every common zero of v and w in GF(p)^2, lexicographically ordered.
/// Throws kFieldMismatch over Q.
std::vector<Point> brute_force_zeros(const BiPoly& v, const BiPoly& w);

/// V and W translated so that the query point sits at the origin.
struct LocalAlgebraInstance {
  BiPoly v;
  BiPoly w;
  int order;  // truncation order N >= 1
  Point shift;
};

LocalAlgebraInstance make_instance(const BiPoly& v, const BiPoly& w,
                                   const FieldElement& a, const FieldElement& b,
                                   int order);

/// dim_K K[x,y] / ((V, W) + m^N) with m the maximal ideal at the origin.
///
/// The quotient by an ideal containing m^N is supported at the origin only,
/// so this global quotient equals the local one. Rows are the truncations of
/// x^i y^j V and x^i y^j W for i + j < N; higher multipliers land in m^N.
int local_dimension(const LocalAlgebraInstance& inst);

/// Same as local_dimension but with `extra_degrees` additional multiplier
/// degrees. Test hook for the truncation argument: the rank never changes.
int local_dimension_with_extra_multipliers(const LocalAlgebraInstance& inst,
                                           int extra_degrees);

inline constexpr int kMaxOrder = 64;

/// i_P(V, W) at P = (a, b): local_dimension for N = 1, 2, ... until two
/// consecutive values agree. Throws kInfiniteMultiplicity when the gcd of V
/// and W vanishes at P, and kCapExceeded past N = kMaxOrder.
int oracle_multiplicity(const BiPoly& v, const BiPoly& w, const FieldElement& a,
                        const FieldElement& b);

/// Rank of a dense matrix by Gaussian elimination over the field; rows are
/// consumed.
int matrix_rank(std::vector<std::vector<FieldElement>> rows);

}  // namespace labatie::oracle
