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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "labatie/labatie.hpp"

namespace labatie::cli {

enum class Command { kDecompose, kSolve, kMultiplicity, kCount, kVerify };
enum class OutputFormat { kText, kJson };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::kSolve;
  FieldSpec field = FieldSpec::rationals();
  std::array<std::string, 2> inputs;
  /// "a,b"; required iff command is kMultiplicity.
  std::optional<std::string> point;
  OutputFormat output = OutputFormat::kText;
  /// verify: trial count and RNG seed (random when unset).
  int trials = 50;
  std::optional<std::uint64_t> seed;
  /// multiplicity: also report the local-algebra oracle value.
  bool oracle = false;
  /// Also write the JSON report to this file.
  std::optional<std::string> out_path;
};

/// "q" or "gf:<p>". Throws Error(kInvalidModulus) or std::invalid_argument.
FieldSpec parse_field(const std::string& text);

/// Runs one command; the report goes to `out`, diagnostics to `err`.
/// Returns kExitOk, kExitVerificationFailed or kExitUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: argument parsing plus run().
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

// JSON encoders, exposed for golden tests.
nlohmann::json scalar_json(const FieldElement& value);
nlohmann::json field_json(const FieldSpec& spec);
nlohmann::json trace_json(const EliminationTrace& trace);
nlohmann::json systems_json(const std::vector<TriangularSystem>& systems);
nlohmann::json points_json(const std::vector<SolutionPoint>& points);

}  // namespace labatie::cli
