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

#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

namespace labatie::cli {
namespace {

using nlohmann::json;

const char* command_name(Command c) {
  switch (c) {
    case Command::kDecompose:
      return "decompose";
    case Command::kSolve:
      return "solve";
    case Command::kMultiplicity:
      return "multiplicity";
    case Command::kCount:
      return "count";
    case Command::kVerify:
      return "verify";
  }
  return "?";
}

std::string point_text(const FieldElement& a, const FieldElement& b) {
  return "(" + a.to_string() + ", " + b.to_string() + ")";
}

json unipolys_json(const std::vector<UniPoly>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(format_poly(BiPoly(p)));
  return out;
}

json bipolys_json(const std::vector<BiPoly>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(format_poly(p));
  return out;
}

std::pair<FieldElement, FieldElement> parse_point(const std::string& text,
                                                  const FieldSpec& spec) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ParseError(ErrorCode::kSyntaxError, text.size(),
                     "point must be written as a,b");
  }
  return {parse_scalar(text.substr(0, comma), spec),
          parse_scalar(text.substr(comma + 1), spec)};
}

// Warns about non-constant stripped contents: their zeros are vertical lines
// of common zeros that the decomposition does not describe.
std::vector<std::string> content_warnings(const NormalizedPair& pair) {
  std::vector<std::string> out;
  const UniPoly* contents[] = {&pair.content_first, &pair.content_second};
  for (int k = 0; k < 2; ++k) {
    if (contents[k]->degree() > 0) {
      out.push_back("input " + std::to_string(k + 1) + " has y-content " +
                    format_poly(BiPoly(*contents[k])) +
                    "; it was removed before elimination");
    }
  }
  return out;
}

struct PairCheck {
  std::vector<std::string> failures;
  int identities = 0;
  int points = 0;
};

// Identities, zero sets (GF(p) only) and multiplicities against the oracle.
PairCheck check_pair(const BiPoly& a, const BiPoly& b) {
  PairCheck result;
  const Elimination e = eliminate(a, b);
  const VerificationReport report = verify_identities(e.trace);
  result.identities = static_cast<int>(report.checks.size());
  for (const auto& f : report.failures()) {
    result.failures.push_back("identity " + f.identity +
                              " at i=" + std::to_string(f.index) +
                              " fails, witness " + format_poly(f.witness));
  }
  const SolutionReport sol = solve_in_field(e.trace);
  result.points = static_cast<int>(sol.points.size());
  if (e.trace.spec().is_prime_field()) {
    const auto zeros = oracle::brute_force_zeros(e.pair.v1, e.pair.v2);
    std::vector<oracle::Point> found;
    for (const auto& p : sol.points) found.emplace_back(p.a, p.b);
    if (found != zeros) {
      result.failures.push_back("solution set differs from brute force (" +
                                std::to_string(found.size()) + " vs " +
                                std::to_string(zeros.size()) + " points)");
    }
  }
  for (const auto& p : sol.points) {
    const int expected =
        oracle::oracle_multiplicity(e.pair.v1, e.pair.v2, p.a, p.b);
    if (expected != p.multiplicity) {
      result.failures.push_back("multiplicity at " + point_text(p.a, p.b) +
                                " is " + std::to_string(p.multiplicity) +
                                ", oracle says " + std::to_string(expected));
    }
  }
  return result;
}

void write_text_trace(const Elimination& e, std::ostream& out) {
  const EliminationTrace& t = e.trace;
  out << "V1 = " << format_poly(t.V[0]) << "\n";
  out << "V2 = " << format_poly(t.V[1]) << "\n";
  if (e.pair.swapped) out << "(inputs swapped so that deg_y V2 <= deg_y V1)\n";
  out << "steps n = " << t.n << "\n";
  for (int i = 1; i <= t.n; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    out << "step " << i << ": u = " << format_poly(BiPoly(t.u[k]))
        << ", Q = " << format_poly(t.Q[k])
        << ", v = " << format_poly(BiPoly(t.v[k]))
        << ", d = " << format_poly(BiPoly(t.d[k]))
        << ", w = " << format_poly(BiPoly(t.w[k])) << "\n";
    out << "  V" << i + 2 << " = " << format_poly(t.V[k + 2]) << "\n";
  }
  for (int i = 0; i <= t.n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out << "G" << i << " = " << format_poly(t.G[k]) << ", H" << i << " = "
        << format_poly(t.H[k]) << "\n";
  }
}

void write_text_systems(const std::vector<TriangularSystem>& systems,
                        std::ostream& out) {
  out << "triangular systems:\n";
  for (const auto& s : systems) {
    out << "  [" << s.index << "] " << format_poly(s.W) << " = 0, "
        << format_poly(BiPoly(s.g)) << " = 0" << (s.empty() ? "  (empty)" : "")
        << "\n";
  }
}

void write_text_points(const std::vector<SolutionPoint>& points,
                       std::ostream& out) {
  out << "solutions in K: " << points.size() << "\n";
  for (const auto& p : points) {
    out << "  " << point_text(p.a, p.b) << " multiplicity " << p.multiplicity;
    std::string sep = "  [";
    for (const auto& c : p.contributions) {
      out << sep << "system " << c.index << ": " << c.multiplicity;
      sep = ", ";
    }
    if (!p.contributions.empty()) out << "]";
    out << "\n";
  }
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const FieldSpec& spec = config.field;
  const BiPoly a = parse_poly(config.inputs[0], spec);
  const BiPoly b = parse_poly(config.inputs[1], spec);

  json report = {{"command", command_name(config.command)},
                 {"field", field_json(spec)},
                 {"inputs", {config.inputs[0], config.inputs[1]}}};
  std::ostringstream text;
  text << "field: " << spec.to_string() << "\n";

  const Elimination e = eliminate(a, b);
  const auto warnings = content_warnings(e.pair);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  if (!warnings.empty()) report["warnings"] = warnings;

  int exit_code = kExitOk;
  switch (config.command) {
    case Command::kDecompose: {
      const auto systems = triangular_systems(e.trace);
      json trace = trace_json(e.trace);
      trace["swapped"] = e.pair.swapped;
      trace["contents"] = {format_poly(BiPoly(e.pair.content_first)),
                           format_poly(BiPoly(e.pair.content_second))};
      report["trace"] = std::move(trace);
      report["systems"] = systems_json(systems);
      write_text_trace(e, text);
      write_text_systems(systems, text);
      break;
    }
    case Command::kSolve: {
      const SolutionReport sol = solve_in_field(e.trace);
      report["systems"] = systems_json(sol.systems);
      report["points"] = points_json(sol.points);
      report["closure_count"] = sol.closure_count;
      write_text_systems(sol.systems, text);
      write_text_points(sol.points, text);
      text << "closure count: " << sol.closure_count << "\n";
      break;
    }
    case Command::kMultiplicity: {
      if (!config.point) {
        throw std::invalid_argument("multiplicity needs --point a,b");
      }
      const auto [pa, pb] = parse_point(*config.point, spec);
      SolutionPoint p{pa, pb, 0, {}};
      p.multiplicity = point_multiplicity(e.trace, pa, pb, &p.contributions);
      json points = points_json({p});
      text << "multiplicity at " << point_text(pa, pb) << ": " << p.multiplicity
           << "\n";
      for (const auto& c : p.contributions) {
        text << "  system " << c.index << ": " << c.multiplicity << "\n";
      }
      if (config.oracle) {
        const int o = oracle::oracle_multiplicity(e.pair.v1, e.pair.v2, pa, pb);
        points[0]["oracle_multiplicity"] = o;
        text << "oracle: " << o << "\n";
      }
      report["points"] = std::move(points);
      break;
    }
    case Command::kCount: {
      const long count = closure_count(e.trace);
      report["closure_count"] = count;
      text << "closure count: " << count << "\n";
      break;
    }
    case Command::kVerify: {
      const std::uint64_t seed =
          config.seed ? *config.seed : std::random_device{}();
      json verification;
      PairCheck main_check = check_pair(a, b);
      bool passed = main_check.failures.empty();
      verification["identities_checked"] = main_check.identities;
      verification["points_checked"] = main_check.points;
      verification["failures"] = main_check.failures;
      text << "input pair: " << main_check.identities << " identity checks, "
           << main_check.points << " solutions checked, "
           << main_check.failures.size() << " failures\n";
      for (const auto& f : main_check.failures) text << "  FAIL " << f << "\n";

      random::Rng rng(seed);
      random::PairOptions opts;
      if (spec.is_prime_field()) {
        opts.max_deg_y = 3;
        opts.max_deg_x = 2;
      } else {
        opts.max_deg_y = 2;
        opts.max_deg_x = 2;
        opts.plant_point = true;
      }
      json trial_failures = json::array();
      for (int k = 0; k < config.trials; ++k) {
        const random::Pair pair = random::coprime_pair(spec, rng, opts);
        const PairCheck c = check_pair(pair.first, pair.second);
        for (const auto& f : c.failures) {
          trial_failures.push_back(
              {{"trial", k},
               {"inputs", {format_poly(pair.first), format_poly(pair.second)}},
               {"failure", f}});
          text << "  FAIL trial " << k << " (" << format_poly(pair.first)
               << ", " << format_poly(pair.second) << "): " << f << "\n";
        }
      }
      passed = passed && trial_failures.empty();
      verification["trials"] = {{"count", config.trials},
                                {"seed", seed},
                                {"failures", trial_failures}};
      verification["passed"] = passed;
      report["verification"] = std::move(verification);
      text << "random trials: " << config.trials << " (seed " << seed << "), "
           << trial_failures.size() << " failures\n";
      text << (passed ? "verification passed" : "verification FAILED") << "\n";
      if (!passed) exit_code = kExitVerificationFailed;
      break;
    }
  }

  if (config.output == OutputFormat::kJson) {
    out << report.dump(2) << "\n";
  } else {
    out << text.str();
  }
  if (config.out_path) {
    std::ofstream file(*config.out_path);
    if (!file) throw std::runtime_error("cannot open " + *config.out_path);
    file << report.dump(2) << "\n";
  }
  return exit_code;
}

}  // namespace

FieldSpec parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return FieldSpec::rationals();
  if (text.rfind("gf:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 12) {
      throw std::invalid_argument("bad modulus in --field " + text);
    }
    return FieldSpec::prime(std::stoull(digits));
  }
  throw std::invalid_argument("--field must be 'q' or 'gf:<prime>', got '" +
                              text + "'");
}

json scalar_json(const FieldElement& value) {
  if (value.spec().is_prime_field()) return value.residue();
  const mpq_class& q = value.rational();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json field_json(const FieldSpec& spec) {
  if (spec.is_prime_field()) {
    return {{"kind", "prime"}, {"modulus", spec.modulus()}};
  }
  return {{"kind", "rationals"}};
}

json trace_json(const EliminationTrace& t) {
  return {{"n", t.n},
          {"V", bipolys_json(t.V)},
          {"Q", bipolys_json(t.Q)},
          {"u", unipolys_json(t.u)},
          {"v", unipolys_json(t.v)},
          {"d", unipolys_json(t.d)},
          {"w", unipolys_json(t.w)},
          {"G", bipolys_json(t.G)},
          {"H", bipolys_json(t.H)}};
}

json systems_json(const std::vector<TriangularSystem>& systems) {
  json out = json::array();
  for (const auto& s : systems) {
    out.push_back({{"index", s.index},
                   {"W", format_poly(s.W)},
                   {"g", format_poly(BiPoly(s.g))},
                   {"empty", s.empty()}});
  }
  return out;
}

json points_json(const std::vector<SolutionPoint>& points) {
  json out = json::array();
  for (const auto& p : points) {
    json contributions = json::array();
    for (const auto& c : p.contributions) {
      contributions.push_back(
          {{"system", c.index}, {"multiplicity", c.multiplicity}});
    }
    out.push_back({{"a", scalar_json(p.a)},
                   {"b", scalar_json(p.b)},
                   {"multiplicity", p.multiplicity},
                   {"contributions", contributions}});
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return execute(config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{
      "Solve systems of two polynomial equations in x and y by "
      "Euclidean elimination"};
  app.require_subcommand(1);

  RunConfig config;
  std::string field = "q";
  std::string format = "text";
  std::string first;
  std::string second;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", field, "Ground field: q or gf:<prime>")
        ->capture_default_str();
    sub->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--out", config.out_path,
                    "Also write the JSON report here");
    sub->add_option("first", first, "First polynomial, e.g. \"y^5 - x^3\"")
        ->required();
    sub->add_option("second", second, "Second polynomial")->required();
  };

  auto* decompose = app.add_subcommand(
      "decompose", "Print the elimination trace and triangular systems");
  auto* solve = app.add_subcommand(
      "solve", "List solutions in K with multiplicities and the closure count");
  auto* multiplicity = app.add_subcommand(
      "multiplicity", "Intersection multiplicity at a point");
  auto* count = app.add_subcommand(
      "count", "Number of solutions over the algebraic closure");
  auto* verify = app.add_subcommand(
      "verify", "Check every identity and cross-check against the oracles");
  for (auto* sub : {decompose, solve, multiplicity, count, verify}) {
    add_common(sub);
  }
  multiplicity->add_option("--point", config.point, "Point as a,b")->required();
  multiplicity->add_flag("--oracle", config.oracle,
                         "Also compute the local-algebra oracle value");
  verify->add_option("--trials", config.trials, "Random trials")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "RNG seed for the random trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (*decompose) config.command = Command::kDecompose;
  if (*solve) config.command = Command::kSolve;
  if (*multiplicity) config.command = Command::kMultiplicity;
  if (*count) config.command = Command::kCount;
  if (*verify) config.command = Command::kVerify;
  config.inputs = {first, second};
  config.output = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  try {
    config.field = parse_field(field);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace labatie::cli
