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

#include "labatie/elimination.hpp"

#include <utility>

#include "labatie/parser.hpp"

namespace labatie {
namespace {

std::size_t at(int one_based) {
  return static_cast<std::size_t>(one_based - 1);
}

}  // namespace

NotCoprimeError::NotCoprimeError(BiPoly common_factor)
    : Error(ErrorCode::kNotCoprime,
            "inputs share the factor " + format_poly(common_factor)),
      common_factor_(std::move(common_factor)) {}

NormalizedPair normalize_pair(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    throw Error(ErrorCode::kZeroInput, "both equations must be non-zero");
  }
  UniPoly ca = y_content(a);
  UniPoly cb = y_content(b);
  BiPoly pa = exact_div(a, ca);
  BiPoly pb = exact_div(b, cb);
  if (pa.deg_y() == 0 || pb.deg_y() == 0) {
    throw Error(ErrorCode::kDegyZero, "primitive part of " +
                                          format_poly(pa.deg_y() == 0 ? a : b) +
                                          " does not involve y");
  }
  const bool swapped = pb.deg_y() > pa.deg_y();
  if (swapped) std::swap(pa, pb);
  return {std::move(pa), std::move(pb), swapped, std::move(ca), std::move(cb)};
}

UniPoly EliminationTrace::reduced_v(int i) const {
  return exact_div(v[at(i)], d[at(i)]);
}

EliminationTrace remainder_sequence(const BiPoly& v1, const BiPoly& v2) {
  if (v2.deg_y() <= 0 || v2.deg_y() > v1.deg_y()) {
    throw Error(ErrorCode::kDegreeOrder,
                "remainder sequence needs 0 < deg_y V2 <= deg_y V1");
  }
  EliminationTrace t;
  t.V = {v1, v2};
  while (true) {
    const BiPoly& vi = t.V[t.V.size() - 2];
    const BiPoly& vnext = t.V.back();
    PseudoDivision pd = pseudo_divide(vi, vnext);
    if (pd.remainder.is_zero()) {
      throw NotCoprimeError(make_monic(vnext));
    }
    t.u.push_back(std::move(pd.multiplier));
    t.Q.push_back(std::move(pd.quotient));
    ++t.n;
    if (pd.remainder.deg_y() == 0) {
      // Final step: v_n is the remainder itself, unnormalized.
      t.v.push_back(pd.remainder.constant_term());
      t.V.push_back(BiPoly::one(v1.spec()));
      return t;
    }
    UniPoly content = y_content(pd.remainder);
    t.V.push_back(exact_div(pd.remainder, content));
    t.v.push_back(std::move(content));
  }
}

void reduction_sequences(EliminationTrace& t) {
  t.d.clear();
  t.w.clear();
  for (int i = 1; i <= t.n; ++i) {
    UniPoly scaled = i == 1 ? t.u[0] : t.w[at(i - 1)] * t.u[at(i)];
    UniPoly d = gcd_monic(scaled, t.v[at(i)]);
    t.w.push_back(exact_div(scaled, d));
    t.d.push_back(std::move(d));
  }
}

void cofactor_sequences(EliminationTrace& t) {
  const FieldSpec spec = t.spec();
  t.G = {BiPoly::one(spec), exact_div(t.Q[0], t.d[0])};
  t.H = {BiPoly(spec), BiPoly(exact_div(t.u[0], t.d[0]))};
  for (int i = 2; i <= t.n; ++i) {
    // The sum is divisible by d_i even when its terms are not.
    const UniPoly tail = t.u[at(i)] * t.reduced_v(i - 1);
    const auto step = [&](const std::vector<BiPoly>& s) {
      BiPoly numer = s[static_cast<std::size_t>(i - 1)] * t.Q[at(i)] +
                     s[static_cast<std::size_t>(i - 2)] * tail;
      return exact_div(numer, t.d[at(i)]);
    };
    t.G.push_back(step(t.G));
    t.H.push_back(step(t.H));
  }
}

Elimination eliminate(const BiPoly& a, const BiPoly& b) {
  NormalizedPair pair = normalize_pair(a, b);
  EliminationTrace trace = remainder_sequence(pair.v1, pair.v2);
  reduction_sequences(trace);
  cofactor_sequences(trace);
  return {std::move(pair), std::move(trace)};
}

std::vector<TriangularSystem> triangular_systems(const EliminationTrace& t) {
  std::vector<TriangularSystem> out;
  out.reserve(static_cast<std::size_t>(t.n));
  for (int i = 1; i <= t.n; ++i) {
    out.push_back({t.V[static_cast<std::size_t>(i)], t.reduced_v(i), i});
  }
  return out;
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<IdentityCheck> VerificationReport::failures() const {
  std::vector<IdentityCheck> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c);
  }
  return out;
}

VerificationReport verify_identities(const EliminationTrace& t) {
  VerificationReport report;
  const FieldSpec spec = t.spec();
  const auto record = [&](const char* name, int i, BiPoly diff) {
    const bool ok = diff.is_zero();
    report.checks.push_back({name, i, ok, std::move(diff)});
  };
  // 1-based accessors matching the recurrences.
  const auto V = [&](int i) -> const BiPoly& { return t.V[at(i)]; };
  const auto G = [&](int i) -> const BiPoly& {
    return t.G[static_cast<std::size_t>(i)];
  };
  const auto H = [&](int i) -> const BiPoly& {
    return t.H[static_cast<std::size_t>(i)];
  };
  const auto red = [&](int i) {
    DivMod qr = divmod(t.v[at(i)], t.d[at(i)]);
    return qr.quotient;
  };

  for (int i = 1; i <= t.n; ++i) {
    record("(1)", i,
           V(i) * t.u[at(i)] - V(i + 1) * t.Q[at(i)] - V(i + 2) * t.v[at(i)]);
  }

  // V_2 .. V_{n+1} are y-primitive with strictly decreasing y-degree.
  for (int i = 2; i <= t.n + 1; ++i) {
    const UniPoly c = y_content(V(i));
    const bool chain = i == 2 || V(i).deg_y() < V(i - 1).deg_y();
    const bool ok = c.degree() == 0 && chain && V(i).deg_y() > 0;
    report.checks.push_back({"primitive", i, ok, ok ? BiPoly(spec) : V(i)});
  }

  const UniPoly one = UniPoly(spec, {1});
  UniPoly u_prod = one;
  UniPoly d_prod = one;
  for (int i = 1; i <= t.n; ++i) {
    u_prod = u_prod * t.u[at(i)];
    d_prod = d_prod * t.d[at(i)];
    record("w", i, BiPoly(t.w[at(i)] * d_prod - u_prod));
    // d_i must divide v_i for the triangular system to be polynomial.
    record("d|v", i, BiPoly(divmod(t.v[at(i)], t.d[at(i)]).remainder));
    const UniPoly rv = red(i);
    const UniPoly g = rv.is_zero() ? UniPoly(spec) : gcd_monic(t.w[at(i)], rv);
    const bool coprime = g.degree() == 0;
    report.checks.push_back(
        {"coprime", i, coprime, coprime ? BiPoly(spec) : BiPoly(g)});
  }

  // Prefix products of v_j / d_j: prefix[k] = prod_{j<=k}.
  std::vector<UniPoly> prefix = {one};
  for (int i = 1; i <= t.n; ++i) prefix.push_back(prefix.back() * red(i));

  for (int i = 2; i <= t.n + 1; ++i) {
    const UniPoly& rv_prev = red(i - 1);
    const UniPoly& w_prev = t.w[at(i - 1)];
    record("(2)", i,
           V(1) * w_prev - G(i - 1) * V(i) - G(i - 2) * V(i + 1) * rv_prev);
    record("(3)", i,
           V(2) * w_prev - H(i - 1) * V(i) - H(i - 2) * V(i + 1) * rv_prev);
    BiPoly lhs = V(i + 1) * prefix[static_cast<std::size_t>(i - 1)];
    if (i % 2 == 1) lhs = -lhs;
    record("(4)", i, lhs - (H(i - 1) * V(1) - G(i - 1) * V(2)));
  }

  for (int i = 1; i <= t.n; ++i) {
    BiPoly det = G(i) * H(i - 1) - G(i - 1) * H(i);
    BiPoly closed =
        BiPoly(t.w[at(i)] * prefix[static_cast<std::size_t>(i - 1)]);
    if (i % 2 == 1) closed = -closed;
    record("D", i, det - closed);
  }
  return report;
}

}  // namespace labatie
