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

#include <vector>

#include "labatie/elimination.hpp"
#include "labatie/field.hpp"

namespace labatie {

struct Contribution {
  int index;         // triangular system i
  int multiplicity;  // i_P(V_{i+1}, v_i/d_i)

  friend bool operator==(const Contribution&, const Contribution&) = default;
};

struct SolutionPoint {
  FieldElement a;
  FieldElement b;
  int multiplicity;  // sum of contributions
  std::vector<Contribution> contributions;
};

struct SolutionReport {
  std::vector<TriangularSystem> systems;
  std::vector<SolutionPoint> points;  // distinct, lexicographic order
  long closure_count;
  FieldSpec field;
};

/// Intersection multiplicity of the triangular system W = 0, g(x) = 0 at
/// (a, b): ord_a(g) * ord_b(W(a, y)).
int triangular_multiplicity(const BiPoly& w, const UniPoly& g,
                            const FieldElement& a, const FieldElement& b);

/// i_P(V1, V2) as the sum over the triangular systems. `contributions`, when
/// given, receives the non-zero terms.
int point_multiplicity(const EliminationTrace& trace, const FieldElement& a,
                       const FieldElement& b,
                       std::vector<Contribution>* contributions = nullptr);

/// Number of common zeros over the algebraic closure of K counted with
/// multiplicity.
long closure_count(const EliminationTrace& trace);

/// Every common zero in K^2 with its multiplicity, plus the closure count.
SolutionReport solve_in_field(const EliminationTrace& trace);

}  // namespace labatie
