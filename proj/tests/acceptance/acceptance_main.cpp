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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. All checks are exact; the only numeric
// thresholds are the wall-clock limits below.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "labatie/labatie.hpp"

namespace labatie {
namespace {

using Clock = std::chrono::steady_clock;

// Time limits, seconds.
constexpr double kGoldenLimit = 1.0;
constexpr double kIdentityLimit = 60.0;
constexpr double kMultiplicityLimit = 300.0;

// Trial counts and degree bounds.
constexpr int kPrimeFieldPairs = 200;
constexpr int kRationalPairs = 50;
constexpr int kPrimeFieldMaxDegY = 6;
constexpr int kRationalMaxDegY = 4;
constexpr int kMaxDegX = 4;
constexpr int kOraclePrimeTrials = 50;
constexpr int kOracleRationalTrials = 10;
constexpr int kTriangularInstances = 100;
constexpr int kPlantedFactorPairs = 20;
constexpr int kRoundTrips = 500;
// Largest local-algebra matrix side allowed in criterion 4.
constexpr long kMaxOracleMatrixSide = 10000;

const std::vector<std::uint32_t> kPrimes = {5, 7, 11, 13};
const FieldSpec kQ = FieldSpec::rationals();

struct Outcome {
  bool pass = true;
  std::string detail;
  // Records a failure; keeps the first message only.
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

BiPoly P(const std::string& text, const FieldSpec& spec = kQ) {
  return parse_poly(text, spec);
}
UniPoly U(const std::string& text) { return P(text).constant_term(); }
FieldElement F(long v, const FieldSpec& spec = kQ) {
  return FieldElement(spec, v);
}

std::string Describe(const BiPoly& a, const BiPoly& b) {
  return "(" + format_poly(a) + ", " + format_poly(b) + ") over " +
         a.spec().to_string();
}

// Criterion 2 and 3 share their GF(p) trials.
struct PrimeTrial {
  random::Pair pair;
  EliminationTrace trace;
};
std::vector<PrimeTrial> g_prime_trials;

Outcome GoldenExample() {
  Outcome o;
  Elimination e = eliminate(P("y^5 - x^3"), P("y^3 - x^4"));
  const EliminationTrace& t = e.trace;
  if (t.n != 3) o.fail("n = " + std::to_string(t.n));
  const std::vector<BiPoly> chain = {P("y^3 - x^4"), P("x*y^2 - 1"),
                                     P("y - x^5"), P("1")};
  if (t.V.size() != 5 ||
      !std::equal(chain.begin(), chain.end(), t.V.begin() + 1)) {
    o.fail("V-chain differs");
  }
  std::vector<TriangularSystem> sys = triangular_systems(t);
  const std::vector<std::pair<BiPoly, UniPoly>> want = {
      {P("y^3 - x^4"), U("x^3")},
      {P("x*y^2 - 1"), U("1")},
      {P("y - x^5"), U("x^11 - 1")}};
  if (sys.size() != want.size()) {
    o.fail("system count " + std::to_string(sys.size()));
  } else {
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (!(sys[i].W == want[i].first) ||
          !(sys[i].g.monic() == want[i].second)) {
        o.fail("system " + std::to_string(i + 1) + " differs");
      }
    }
    if (!sys[1].empty()) o.fail("system 2 not flagged empty");
  }
  SolutionReport r = solve_in_field(t);
  if (r.points.size() != 2 || !(r.points[0].a == F(0)) ||
      !(r.points[0].b == F(0)) || r.points[0].multiplicity != 9 ||
      !(r.points[1].a == F(1)) || !(r.points[1].b == F(1)) ||
      r.points[1].multiplicity != 1) {
    o.fail("solutions differ from {(0,0): 9, (1,1): 1}");
  }
  if (r.closure_count != 20) {
    o.fail("closure count " + std::to_string(r.closure_count));
  }
  if (o.pass) o.detail = "n=3, points (0,0)x9 (1,1)x1, closure count 20";
  return o;
}

Outcome IdentitySuite() {
  Outcome o;
  random::Rng rng(20260101);
  random::PairOptions popts;
  popts.max_deg_y = kPrimeFieldMaxDegY;
  popts.max_deg_x = kMaxDegX;
  long checks = 0;
  g_prime_trials.clear();
  for (int k = 0; k < kPrimeFieldPairs; ++k) {
    const FieldSpec spec = FieldSpec::prime(kPrimes[k % kPrimes.size()]);
    random::Pair pair = random::coprime_pair(spec, rng, popts);
    EliminationTrace t = eliminate(pair.first, pair.second).trace;
    VerificationReport rep = verify_identities(t);
    checks += static_cast<long>(rep.checks.size());
    if (!rep.all_passed()) {
      o.fail("identity " + rep.failures().front().identity + " failed on " +
             Describe(pair.first, pair.second));
    }
    g_prime_trials.push_back({std::move(pair), std::move(t)});
  }
  random::PairOptions qopts;
  qopts.max_deg_y = kRationalMaxDegY;
  qopts.max_deg_x = kMaxDegX;
  for (int k = 0; k < kRationalPairs; ++k) {
    random::Pair pair = random::coprime_pair(kQ, rng, qopts);
    VerificationReport rep =
        verify_identities(eliminate(pair.first, pair.second).trace);
    checks += static_cast<long>(rep.checks.size());
    if (!rep.all_passed()) {
      o.fail("identity " + rep.failures().front().identity + " failed on " +
             Describe(pair.first, pair.second));
    }
  }
  if (o.pass) {
    o.detail = std::to_string(kPrimeFieldPairs) + " GF(p) + " +
               std::to_string(kRationalPairs) + " Q pairs, " +
               std::to_string(checks) + " exact checks";
  }
  return o;
}

Outcome SolutionSets() {
  Outcome o;
  if (g_prime_trials.size() != static_cast<std::size_t>(kPrimeFieldPairs)) {
    o.fail("criterion 2 trials unavailable");
    return o;
  }
  long points = 0;
  for (const auto& trial : g_prime_trials) {
    SolutionReport r = solve_in_field(trial.trace);
    std::vector<oracle::Point> got;
    for (const auto& p : r.points) got.emplace_back(p.a, p.b);
    std::vector<oracle::Point> truth =
        oracle::brute_force_zeros(trial.pair.first, trial.pair.second);
    points += static_cast<long>(truth.size());
    if (got != truth) {
      o.fail("point sets differ on " +
             Describe(trial.pair.first, trial.pair.second));
    }
  }
  if (o.pass) {
    o.detail = std::to_string(g_prime_trials.size()) + " trials, " +
               std::to_string(points) + " common zeros";
  }
  return o;
}

Outcome Multiplicities() {
  Outcome o;
  random::Rng rng(20260202);
  long points = 0;
  int max_mult = 0;
  const auto check = [&](const random::Pair& pair) {
    EliminationTrace t = eliminate(pair.first, pair.second).trace;
    SolutionReport r = solve_in_field(t);
    for (const auto& p : r.points) {
      const int truth =
          oracle::oracle_multiplicity(pair.first, pair.second, p.a, p.b);
      ++points;
      max_mult = std::max(max_mult, truth);
      if (truth != p.multiplicity) {
        o.fail("multiplicity " + std::to_string(p.multiplicity) +
               " vs oracle " + std::to_string(truth) + " on " +
               Describe(pair.first, pair.second));
      }
    }
    return r.points.size();
  };
  random::PairOptions popts;
  popts.max_deg_y = 4;
  popts.max_deg_x = 3;
  for (int k = 0; k < kOraclePrimeTrials; ++k) {
    const FieldSpec spec = FieldSpec::prime(kPrimes[k % kPrimes.size()]);
    check(random::coprime_pair(spec, rng, popts));
  }
  random::PairOptions qopts;
  qopts.max_deg_y = 3;
  qopts.max_deg_x = 2;
  qopts.plant_point = true;
  for (int k = 0; k < kOracleRationalTrials; ++k) {
    if (check(random::coprime_pair(kQ, rng, qopts)) == 0) {
      o.fail("planted rational point not found");
    }
  }
  // The oracle's matrix side is bounded by the monomial count below
  // the stabilizing order, at most (m + 2)(m + 3) / 2 for multiplicity m.
  const long side = static_cast<long>(max_mult + 2) * (max_mult + 3) / 2;
  if (side > kMaxOracleMatrixSide) o.fail("oracle matrix exceeded bound");
  if (points == 0) o.fail("no common zeros exercised");
  if (o.pass) {
    o.detail = std::to_string(kOraclePrimeTrials) + " GF(p) + " +
               std::to_string(kOracleRationalTrials) + " Q trials, " +
               std::to_string(points) + " points, max multiplicity " +
               std::to_string(max_mult);
  }
  return o;
}

Outcome TriangularFormula() {
  Outcome o;
  if (oracle::oracle_multiplicity(P("y^2 - x"), P("x"), F(0), F(0)) != 2) {
    o.fail("parabola multiplicity != 2");
  }
  if (triangular_multiplicity(P("y^3 - x^4"), U("x^3"), F(0), F(0)) != 9) {
    o.fail("triangular multiplicity != 9");
  }
  random::Rng rng(20260303);
  for (int k = 0; k < kTriangularInstances; ++k) {
    const FieldSpec spec = FieldSpec::prime(kPrimes[k % kPrimes.size()]);
    const FieldElement a = random::element(spec, rng);
    const FieldElement b = random::element(spec, rng);
    const BiPoly lin(spec, {UniPoly::constant(-b), UniPoly(spec, {1})});
    // Retry until the instance is a valid triangular system: g non-zero,
    // W of positive y-degree with a non-vanishing section at a.
    while (true) {
      UniPoly g =
          pow(UniPoly::linear_root(a), static_cast<unsigned>(1 + k % 3)) *
          random::unipoly(spec, rng, 2);
      BiPoly w =
          pow(lin, static_cast<unsigned>(1 + (k / 3) % 3)) *
              BiPoly(random::unipoly(spec, rng, 1)) +
          BiPoly(UniPoly::linear_root(a)) * random::bipoly(spec, rng, 2, 1);
      if (g.is_zero() || w.deg_y() <= 0 || section_at(w, a).is_zero()) continue;
      const int formula = ord_at(g, a) * ord_at(section_at(w, a), b);
      const int truth = oracle::oracle_multiplicity(w, BiPoly(g), a, b);
      if (formula != truth || triangular_multiplicity(w, g, a, b) != truth) {
        o.fail("formula " + std::to_string(formula) + " vs oracle " +
               std::to_string(truth) + " on " + Describe(w, BiPoly(g)));
      }
      break;
    }
  }
  if (o.pass) {
    o.detail = "spot checks 2 and 9, " + std::to_string(kTriangularInstances) +
               " random triangular instances";
  }
  return o;
}

template <typename Fn>
std::optional<ErrorCode> CodeOf(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

Outcome NegativePaths() {
  Outcome o;
  random::Rng rng(20260404);
  int planted = 0;
  while (planted < kPlantedFactorPairs) {
    const FieldSpec spec =
        planted % 2 == 0 ? kQ
                         : FieldSpec::prime(kPrimes[planted % kPrimes.size()]);
    BiPoly f = random::bipoly(spec, rng, 1 + planted % 2, 2);
    BiPoly a = random::bipoly(spec, rng, planted % 3, 2);
    BiPoly b = random::bipoly(spec, rng, 1 + planted % 3, 2);
    if (f.deg_y() <= 0 || a.is_zero() || b.is_zero()) continue;
    ++planted;
    if (CodeOf([&] { eliminate(f * a, f * b); }) != ErrorCode::kNotCoprime) {
      o.fail("planted factor missed on " + Describe(f * a, f * b));
    }
  }
  for (const char* flat : {"x", "x^2 - 1", "x*y - x*y + 3", "x^2*y^0"}) {
    if (CodeOf([&] { eliminate(P("y^2 - x"), P(flat)); }) !=
        ErrorCode::kDegyZero) {
      o.fail(std::string("DegyZero not raised for ") + flat);
    }
  }
  if (CodeOf([&] {
        oracle::oracle_multiplicity(P("(y - x)*(y + 1)"), P("(y - x)*(x - 3)"),
                                    F(2), F(2));
      }) != ErrorCode::kInfiniteMultiplicity) {
    o.fail("InfiniteMultiplicity not raised");
  }
  if (o.pass) {
    o.detail = std::to_string(kPlantedFactorPairs) +
               " planted NotCoprime, 4 DegyZero, 1 InfiniteMultiplicity";
  }
  return o;
}

Outcome ParserRoundTrip() {
  Outcome o;
  random::Rng rng(20260505);
  const std::vector<FieldSpec> specs = {kQ, FieldSpec::prime(7),
                                        FieldSpec::prime(101)};
  for (int k = 0; k < kRoundTrips; ++k) {
    const FieldSpec& spec = specs[k % specs.size()];
    BiPoly w = random::bipoly(spec, rng, k % 7, 6, 50);
    const std::string text = format_poly(w);
    if (!(parse_poly(text, spec) == w)) o.fail("round trip failed: " + text);
  }
  // The five example polynomials against hand-built values and against the
  // values the engine produced in criterion 1.
  const auto mono = [](long c, int i, int j) {
    return BiPoly::monomial(F(c), i, j);
  };
  const std::vector<std::pair<std::string, BiPoly>> examples = {
      {"y^5 - x^3", mono(1, 0, 5) + mono(-1, 3, 0)},
      {"y^3 - x^4", mono(1, 0, 3) + mono(-1, 4, 0)},
      {"x*y^2 - 1", mono(1, 1, 2) + mono(-1, 0, 0)},
      {"y - x^5", mono(1, 0, 1) + mono(-1, 5, 0)},
      {"x^11 - 1", mono(1, 11, 0) + mono(-1, 0, 0)}};
  EliminationTrace t = eliminate(examples[0].second, examples[1].second).trace;
  const std::vector<BiPoly> engine = {t.V[0], t.V[1], t.V[2], t.V[3],
                                      BiPoly(t.reduced_v(3))};
  for (std::size_t i = 0; i < examples.size(); ++i) {
    const BiPoly parsed = parse_poly(examples[i].first, kQ);
    if (!(parsed == examples[i].second) || !(parsed == engine[i])) {
      o.fail("example polynomial mismatch: " + examples[i].first);
    }
  }
  if (o.pass) {
    o.detail = std::to_string(kRoundTrips) +
               " random round trips, 5 example polynomials";
  }
  return o;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
  double limit_seconds;  // 0 means no limit
};

}  // namespace
}  // namespace labatie

int main() {
  using namespace labatie;
  const std::vector<Criterion> criteria = {
      {1, "worked example golden test", GoldenExample, kGoldenLimit},
      {2, "identity suite", IdentitySuite, kIdentityLimit},
      {3, "solution sets vs brute force", SolutionSets, 0},
      {4, "multiplicities vs local-algebra oracle", Multiplicities,
       kMultiplicityLimit},
      {5, "triangular multiplicity formula", TriangularFormula, 0},
      {6, "negative-path contract", NegativePaths, 0},
      {7, "parser round trip", ParserRoundTrip, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      std::ostringstream why;
      why << "took " << secs << " s, limit " << c.limit_seconds << " s";
      o.fail(why.str());
    }
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL")
              << "  " << c.name << "  [" << o.detail << "; " << time.str()
              << " s]" << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
