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

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "labatie/labatie.hpp"
#include "support/test_oracles.hpp"

namespace labatie::oracle {
namespace {

using testing::F;
using testing::kQ;
using testing::P;
using testing::U;

const FieldSpec kGF5 = FieldSpec::prime(5);
const FieldSpec kGF7 = FieldSpec::prime(7);

TEST(BruteForceTest, Examples) {
  EXPECT_EQ(brute_force_zeros(P("y^2 - x", kGF5), P("y", kGF5)),
            (std::vector<Point>{{F(0, kGF5), F(0, kGF5)}}));
  EXPECT_TRUE(brute_force_zeros(P("y", kGF5), P("y + 1", kGF5)).empty());

  std::vector<Point> z =
      brute_force_zeros(P("y^5 - x^3", kGF7), P("y^3 - x^4", kGF7));
  EXPECT_NE(std::find(z.begin(), z.end(), Point{F(0, kGF7), F(0, kGF7)}),
            z.end());
  EXPECT_NE(std::find(z.begin(), z.end(), Point{F(1, kGF7), F(1, kGF7)}),
            z.end());
  EXPECT_TRUE(std::is_sorted(z.begin(), z.end()));
}

TEST(BruteForceTest, RejectsRationals) {
  try {
    brute_force_zeros(P("y"), P("x"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFieldMismatch);
  }
}

TEST(MatrixRankTest, Small) {
  const auto row = [](std::initializer_list<long> xs) {
    std::vector<FieldElement> r;
    for (long x : xs) r.push_back(F(x));
    return r;
  };
  EXPECT_EQ(matrix_rank({}), 0);
  EXPECT_EQ(matrix_rank({row({1, 2}), row({2, 4})}), 1);
  EXPECT_EQ(matrix_rank({row({1, 2, 3}), row({0, 1, 1}), row({1, 3, 4})}), 2);
  EXPECT_EQ(matrix_rank({row({0, 0}), row({0, 5})}), 1);
}

TEST(LocalDimensionTest, Examples) {
  EXPECT_EQ(local_dimension(make_instance(P("y^2 - x"), P("y"), F(0), F(0), 3)),
            1);
  EXPECT_EQ(local_dimension(make_instance(P("y^2 - x"), P("x"), F(0), F(0), 4)),
            2);
  EXPECT_EQ(local_dimension(
                make_instance(P("y^5 - x^3"), P("y^3 - x^4"), F(0), F(0), 16)),
            9);
}

TEST(LocalDimensionTest, MonotoneAndTruncationSound) {
  random::Rng rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldSpec spec = trial % 2 == 0 ? kQ : kGF7;
    BiPoly v = random::bipoly(spec, rng, 2, 2);
    BiPoly w = random::bipoly(spec, rng, 2, 2);
    // Make the origin a common zero.
    const FieldElement zero = F(0, spec);
    v -= BiPoly(UniPoly::constant(eval_point(v, zero, zero)));
    w -= BiPoly(UniPoly::constant(eval_point(w, zero, zero)));
    if (v.is_zero() || w.is_zero() ||
        !(bivariate_gcd(v, w) == BiPoly::one(spec)))
      continue;
    int prev = 0;
    for (int n = 1; n <= 7; ++n) {
      LocalAlgebraInstance inst =
          make_instance(v, w, F(0, spec), F(0, spec), n);
      const int dim = local_dimension(inst);
      EXPECT_GE(dim, prev);
      prev = dim;
      EXPECT_EQ(local_dimension_with_extra_multipliers(inst, 2), dim);
    }
  }
}

TEST(OracleMultiplicityTest, Examples) {
  EXPECT_EQ(oracle_multiplicity(P("y^5 - x^3"), P("y^3 - x^4"), F(0), F(0)), 9);
  EXPECT_EQ(oracle_multiplicity(P("y^5 - x^3"), P("y^3 - x^4"), F(1), F(1)), 1);
  EXPECT_EQ(oracle_multiplicity(P("y"), P("x"), F(0), F(0)), 1);
  EXPECT_EQ(oracle_multiplicity(P("y^2 - x"), P("x"), F(0), F(0)), 2);
  EXPECT_EQ(oracle_multiplicity(P("y^2 - x"), P("x"), F(1), F(0)), 0);
}

TEST(OracleMultiplicityTest, CommonComponentThroughPoint) {
  try {
    oracle_multiplicity(P("(y - x)*(y + 1)"), P("(y - x)*x"), F(2), F(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfiniteMultiplicity);
  }
  // The same pair away from the shared line is finite.
  EXPECT_EQ(
      oracle_multiplicity(P("(y - x)*(y + 1)"), P("(y - x)*x"), F(0), F(-1)),
      1);
}

TEST(OracleMultiplicityTest, TriangularInstancesMatchProduct) {
  random::Rng rng(107);
  const std::vector<std::uint32_t> primes = {5, 7, 11, 13};
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const FieldSpec spec = FieldSpec::prime(primes[trial % primes.size()]);
    const FieldElement a = random::element(spec, rng);
    const FieldElement b = random::element(spec, rng);
    // g has a root of random order at a; W passes through (a, b) with a
    // random order in y.
    const int ka = 1 + trial % 3;
    UniPoly g = pow(UniPoly::linear_root(a), static_cast<unsigned>(ka)) *
                random::unipoly(spec, rng, 1);
    if (g.is_zero()) continue;
    const int kb = 1 + (trial / 3) % 3;
    BiPoly lin(spec, {UniPoly::constant(-b), UniPoly(spec, {1})});
    BiPoly tri =
        pow(lin, static_cast<unsigned>(kb)) *
            BiPoly(random::unipoly(spec, rng, 1)) +
        BiPoly(UniPoly::linear_root(a)) * random::bipoly(spec, rng, 1, 1);
    if (tri.is_zero() || tri.deg_y() <= 0) continue;
    if (section_at(tri, a).is_zero()) continue;
    const int expected = ord_at(g, a) * ord_at(section_at(tri, a), b);
    EXPECT_EQ(oracle_multiplicity(tri, BiPoly(g), a, b), expected)
        << format_poly(tri) << " | " << g.to_string('x');
    ++checked;
  }
  EXPECT_GT(checked, 60);
}

TEST(OracleMultiplicityTest, AdditiveInSecondArgument) {
  random::Rng rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    const FieldSpec spec = trial % 2 == 0 ? kGF7 : FieldSpec::prime(11);
    const FieldElement zero = F(0, spec);
    const auto through_origin = [&](BiPoly p) {
      return p - BiPoly(UniPoly::constant(eval_point(p, zero, zero)));
    };
    BiPoly v = through_origin(random::bipoly(spec, rng, 2, 2));
    BiPoly w1 = through_origin(random::bipoly(spec, rng, 1, 2));
    BiPoly w2 = random::bipoly(spec, rng, 1, 2);
    if (v.is_zero() || w1.is_zero() || w2.is_zero()) continue;
    if (!(bivariate_gcd(v, w1 * w2) == BiPoly::one(spec))) continue;
    EXPECT_EQ(oracle_multiplicity(v, w1 * w2, zero, zero),
              oracle_multiplicity(v, w1, zero, zero) +
                  oracle_multiplicity(v, w2, zero, zero));
  }
}

TEST(OracleMultiplicityTest, SymmetricAndUnitInvariant) {
  random::Rng rng(113);
  random::PairOptions opts;
  opts.max_deg_y = 3;
  opts.max_deg_x = 2;
  for (int trial = 0; trial < 30; ++trial) {
    const FieldSpec spec = trial % 2 == 0 ? kGF5 : FieldSpec::prime(13);
    random::Pair pair = random::coprime_pair(spec, rng, opts);
    for (const auto& [a, b] : brute_force_zeros(pair.first, pair.second)) {
      const int m = oracle_multiplicity(pair.first, pair.second, a, b);
      EXPECT_EQ(oracle_multiplicity(pair.second, pair.first, a, b), m);
      // (V, W) and (V, 2W + x*V) generate the same ideal.
      BiPoly w2 = pair.second * UniPoly::constant(F(2, spec)) +
                  BiPoly::x(spec) * pair.first;
      EXPECT_EQ(oracle_multiplicity(pair.first, w2, a, b), m);
      // Scaling by a unit at P: 1 + x - a does not vanish at (a, b).
      BiPoly unit = BiPoly::one(spec) + BiPoly(UniPoly::linear_root(a));
      EXPECT_EQ(oracle_multiplicity(pair.first * unit, pair.second, a, b), m);
    }
  }
}

}  // namespace
}  // namespace labatie::oracle
