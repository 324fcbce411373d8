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

#include "labatie/solver.hpp"

#include <algorithm>
#include <utility>

namespace labatie {

int triangular_multiplicity(const BiPoly& w, const UniPoly& g,
                            const FieldElement& a, const FieldElement& b) {
  const int along_x = ord_at(g, a);
  if (along_x == 0) return 0;
  return along_x * ord_at(section_at(w, a), b);
}

int point_multiplicity(const EliminationTrace& trace, const FieldElement& a,
                       const FieldElement& b,
                       std::vector<Contribution>* contributions) {
  int total = 0;
  for (int i = 1; i <= trace.n; ++i) {
    const int m = triangular_multiplicity(trace.V[static_cast<std::size_t>(i)],
                                          trace.reduced_v(i), a, b);
    if (m == 0) continue;
    total += m;
    if (contributions != nullptr) contributions->push_back({i, m});
  }
  return total;
}

long closure_count(const EliminationTrace& trace) {
  long total = 0;
  for (const auto& sys : triangular_systems(trace)) {
    if (sys.g.degree() <= 0) continue;
    const int top = sys.W.deg_y();
    long term = static_cast<long>(sys.g.degree()) * top;
    // Over a root a of g, the section W(a, y) loses one degree for every
    // k such that the top k y-coefficients of W all vanish at a.
    UniPoly h(sys.W.spec());
    for (int k = 1; k <= top; ++k) {
      const UniPoly c = sys.W.coeff(top - k + 1);
      h = h.is_zero() ? c.monic() : gcd_monic(h, c);
      term -= supported_part_degree(sys.g, h);
    }
    total += term;
  }
  return total;
}

SolutionReport solve_in_field(const EliminationTrace& trace) {
  SolutionReport report{
      triangular_systems(trace), {}, closure_count(trace), trace.spec()};
  std::vector<std::pair<FieldElement, FieldElement>> candidates;
  for (const auto& sys : report.systems) {
    if (sys.empty()) continue;
    for (const auto& ra : roots_in_field(sys.g)) {
      // W is y-primitive, so its section is never identically zero.
      for (const auto& rb : roots_in_field(section_at(sys.W, ra.root))) {
        candidates.emplace_back(ra.root, rb.root);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (auto& [a, b] : candidates) {
    SolutionPoint p{a, b, 0, {}};
    p.multiplicity = point_multiplicity(trace, a, b, &p.contributions);
    report.points.push_back(std::move(p));
  }
  return report;
}

}  // namespace labatie
