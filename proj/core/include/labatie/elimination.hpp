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

#include <string>
#include <vector>

#include "labatie/bipoly.hpp"
#include "labatie/error.hpp"
#include "labatie/unipoly.hpp"

// Labatie elimination of a pair of bivariate polynomials.
//
// For coprime y-primitive V1, V2 with 0 < deg_y V2 <= deg_y V1, iterated
// pseudo-division produces the remainder sequence
//
//   u_i V_i = Q_i V_{i+1} + v_i V_{i+2},   i = 1..n,   V_{n+2} = 1,
//
// with V_{i+2} y-primitive. The reduction sequences
//
//   d_1 = gcd(u_1, v_1),              w_1 = u_1 / d_1,
//   d_i = gcd(w_{i-1} u_i, v_i),      w_i = w_{i-1} u_i / d_i,
//
// turn {V1 = V2 = 0} into the union of triangular systems
// {V_{i+1} = 0, v_i / d_i = 0}. The cofactors G_i, H_i satisfy
//
//   w_{i-1} V1 = G_{i-1} V_i + G_{i-2} V_{i+1} v_{i-1}/d_{i-1},
//   w_{i-1} V2 = H_{i-1} V_i + H_{i-2} V_{i+1} v_{i-1}/d_{i-1},
//   (-1)^i (v_1...v_{i-1})/(d_1...d_{i-1}) V_{i+1} = H_{i-1} V1 - G_{i-1} V2,
//
// for i = 2..n+1; verify_identities checks all of them exactly.

namespace labatie {

/// Thrown by remainder_sequence when a zero remainder shows the inputs share
/// a factor of positive y-degree.
class NotCoprimeError : public Error {
 public:
  explicit NotCoprimeError(BiPoly common_factor);

  /// The last non-zero remainder, normalized with make_monic.
  const BiPoly& common_factor() const noexcept { return common_factor_; }

 private:
  BiPoly common_factor_;
};

struct NormalizedPair {
  BiPoly v1;
  BiPoly v2;
  bool swapped = false;
  /// Stripped y-contents of the first and second *input*, in input order.
  UniPoly content_first;
  UniPoly content_second;
};

/// Strips y-contents and orders so that deg_y v2 <= deg_y v1. Throws
/// kZeroInput on a zero input and kDegyZero when a primitive part is
/// independent of y.
NormalizedPair normalize_pair(const BiPoly& a, const BiPoly& b);

/// Record of one elimination run. Sequences are stored 0-based: V[k] holds
/// V_{k+1}, u[k] holds u_{k+1}, and so on; G[k] and H[k] hold G_k and H_k.
struct EliminationTrace {
  std::vector<BiPoly> V;  // V_1 .. V_{n+2}
  std::vector<BiPoly> Q;  // Q_1 .. Q_n
  std::vector<UniPoly> u;
  std::vector<UniPoly> v;
  std::vector<UniPoly> d;
  std::vector<UniPoly> w;
  std::vector<BiPoly> G;  // G_0 .. G_n
  std::vector<BiPoly> H;  // H_0 .. H_n
  int n = 0;

  FieldSpec spec() const { return V.front().spec(); }
  /// v_i / d_i for 1-based i in [1, n].
  UniPoly reduced_v(int i) const;
};

/// Fills V, Q, u, v and n. Throws NotCoprimeError on a zero remainder and
/// kDegreeOrder when the preconditions on deg_y fail.
EliminationTrace remainder_sequence(const BiPoly& v1, const BiPoly& v2);

/// Fills d and w in place.
void reduction_sequences(EliminationTrace& trace);

/// Fills G and H in place. Throws kInexactDivision if a division by d_i
/// leaves a remainder, which would indicate a bug.
void cofactor_sequences(EliminationTrace& trace);

/// normalize_pair, then all three stages above.
struct Elimination {
  NormalizedPair pair;
  EliminationTrace trace;
};
Elimination eliminate(const BiPoly& a, const BiPoly& b);

struct TriangularSystem {
  BiPoly W;   // V_{i+1}
  UniPoly g;  // v_i / d_i
  int index;  // i, 1-based

  /// g is a non-zero constant, so the system has no solutions.
  bool empty() const { return g.degree() == 0; }
};

std::vector<TriangularSystem> triangular_systems(const EliminationTrace& trace);

struct IdentityCheck {
  std::string identity;  // "(1)", "(2)", "(3)", "(4)", "D", "w", "coprime"
  int index;             // the i the identity is instantiated at
  bool passed;
  /// Non-zero difference (lhs - rhs) on failure; for "coprime" the gcd
  /// embedded as a BiPoly.
  BiPoly witness;
};

struct VerificationReport {
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  std::vector<IdentityCheck> failures() const;
};

/// Checks every identity of the elimination exactly; failures are reported,
/// never thrown.
VerificationReport verify_identities(const EliminationTrace& trace);

}  // namespace labatie
