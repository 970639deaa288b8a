// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "json_support.hpp"
#include "matmed/errors.hpp"
#include "matmed/extensions.hpp"
#include "matmed/instance_io.hpp"
#include "matmed/knapsack.hpp"
#include "matmed/oracle.hpp"
#include "matmed/reductions.hpp"
#include "matmed/relaxation.hpp"

namespace matmed {
namespace {

using json_support::from_rational;
using json_support::Json;

const char* const kMatroidKinds[] = {"uniform", "partition", "laminar", "graphic", "explicit"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// Parses and validates; violations go to `err`.
std::optional<MedianInstance> load_instance(const std::string& path, std::ostream& err) {
  MedianInstance inst = parse_instance(read_file(path));
  const auto problems = validate(inst);
  if (problems.empty()) return inst;
  for (const auto& p : problems) err << "invalid: " << p << "\n";
  return std::nullopt;
}

std::string ratio(const Rational& num, const Rational& den) {
  if (sgn(den) == 0) return sgn(num) == 0 ? "1.000000" : "inf";
  return to_decimal(num / den, 6);
}

GeneratorParams parse_params(const std::string& text) {
  GeneratorParams params;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("expected key=value in --params, got \"" + item + "\"");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    auto number = [&]() {
      try {
        size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used == value.size()) return v;
      } catch (const std::exception&) {
      }
      throw InvalidArgument("--params " + key + " needs an integer");
    };
    if (key == "facilities") {
      params.facilities = number();
    } else if (key == "clients") {
      params.clients = number();
    } else if (key == "matroid") {
      params.matroid = value;
    } else if (key == "variant") {
      params.variant = value;
    } else if (key == "metric") {
      params.metric = value;
    } else {
      throw InvalidArgument("unknown --params key \"" + key + "\"");
    }
  }
  return params;
}

std::pair<uint64_t, uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const uint64_t s = std::stoull(text);
      return {s, s};
    }
    const uint64_t a = std::stoull(text.substr(0, dots)), b = std::stoull(text.substr(dots + 2));
    if (a <= b) return {a, b};
  } catch (const std::exception&) {
  }
  throw InvalidArgument("--seeds expects A..B with A <= B, got \"" + text + "\"");
}

// Runs `body`, mapping library errors to exit codes.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidArgument& e) {
    err << "invalid: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const SizeCapError& e) {
    err << "too large: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

SolveReport solve_instance(const MedianInstance& instance, const SolveOptions& options) {
  if (std::holds_alternative<IntersectionVariant>(instance.variant)) {
    throw InvalidArgument("intersection instances are only accepted by the exact solver");
  }
  const bool plain = std::holds_alternative<PlainVariant>(instance.variant);
  if (!plain && options.mode != RoundingMode::kImproved) {
    throw InvalidArgument(std::string("mode ") + mode_name(options.mode) + " applies to plain instances only");
  }
  const bool knapsack = std::holds_alternative<KnapsackVariant>(instance.variant);
  if (!knapsack && (options.connection_guess || options.facility_guess)) {
    throw InvalidArgument("fixed guesses apply to knapsack instances only");
  }
  SolveReport report;
  const FractionalSolution frac = solve_relaxation(instance);
  report.lp = frac.objective;
  if (plain) {
    report.solution = round_matroid_median(instance, frac, options.mode);
  } else if (std::holds_alternative<PenaltyVariant>(instance.variant)) {
    report.solution = round_with_penalties(instance, frac);
  } else if (knapsack) {
    if (options.connection_guess || options.facility_guess) {
      if (!options.connection_guess || !options.facility_guess) {
        throw InvalidArgument("a fixed guess needs both a connection and a facility value");
      }
      report.solution = round_knapsack_once(
          instance, make_guess(instance, *options.connection_guess, *options.facility_guess));
    } else {
      report.solution = knapsack_median(instance, options.epsilon);
    }
  } else {
    report.solution = round_split(instance, frac);
  }
  return report;
}

std::string solution_json(const MedianInstance& instance, const RoundedSolution& sol) {
  Json doc;
  Json open = Json::array();
  for (int i : sol.open) open.push_back(instance.facilities[i]);
  doc["open"] = std::move(open);
  Json assignment = Json::object();
  for (int j = 0; j < instance.num_clients(); ++j) {
    const bool served = j < static_cast<int>(sol.assignment.size()) && sol.assignment[j];
    assignment[instance.clients[j]] = served ? Json(instance.facilities[*sol.assignment[j]]) : Json(nullptr);
  }
  doc["assignment"] = std::move(assignment);
  doc["facility_cost"] = from_rational(sol.facility_cost);
  doc["connection_cost"] = from_rational(sol.connection_cost);
  doc["penalty_cost"] = from_rational(sol.penalty_cost);
  doc["cost"] = from_rational(sol.total());
  Json values = Json::array();
  for (const auto& [name, value] : sol.certificate.values) {
    values.push_back({{"name", name}, {"value", from_rational(value)}});
  }
  Json checks = Json::array();
  for (const auto& c : sol.certificate.checks) {
    checks.push_back(
        {{"name", c.name}, {"lhs", from_rational(c.lhs)}, {"rhs", from_rational(c.rhs)}, {"holds", c.holds()}});
  }
  doc["certificate"] = {{"values", std::move(values)}, {"checks", std::move(checks)}};
  return doc.dump(2);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid median solvers with exact rational arithmetic", "matmed"};
  app.require_subcommand(1);

  std::string file, mode_text = "improved", variant_text = "auto", epsilon_text = "1/10";
  std::string connection_text, facility_text;
  auto* solve = app.add_subcommand("solve", "Round the LP relaxation and print the solution as JSON");
  solve->add_option("file", file, "Instance JSON")->required();
  solve->add_option("--mode", mode_text, "basic, improved or lmp (plain instances)");
  solve->add_option("--variant", variant_text, "auto, or the variant the instance must have");
  solve->add_option("--epsilon", epsilon_text, "Knapsack guess grid step, as p/q");
  solve->add_option("--connection-guess", connection_text, "Knapsack: fixed connection cost guess");
  solve->add_option("--facility-guess", facility_text, "Knapsack: fixed largest opening cost guess");

  int cap = kDefaultOracleCap;
  auto* exact = app.add_subcommand("exact", "Solve exactly by enumerating open sets");
  exact->add_option("file", file, "Instance JSON")->required();
  exact->add_option("--cap", cap, "Largest facility count to enumerate");

  std::string kind, source, target;
  auto* reduce = app.add_subcommand("reduce", "Encode a source problem as a median instance");
  reduce->add_option("kind", kind, "data_placement, mobile_facility, kmedian_forest, min_latency or hardness")
      ->required();
  reduce->add_option("src", source, "Source problem JSON")->required();
  reduce->add_option("dst", target, "Instance output; the mapping goes to <dst>.mapping.json")->required();

  uint64_t seed = 0;
  std::string params_text, output;
  auto* gen = app.add_subcommand("gen", "Write a random instance");
  gen->add_option("--seed", seed, "Generator seed")->required();
  gen->add_option("--params", params_text, "key=value list: facilities, clients, matroid, variant, metric");
  gen->add_option("-o,--output", output, "Output file (default: standard output)");

  std::string seeds_text, bench_variant = "plain";
  auto* bench = app.add_subcommand("bench", "CSV of algorithm and exact costs over a seed range");
  bench->add_option("--seeds", seeds_text, "Seed range A..B")->required();
  bench->add_option("--variant", bench_variant, "plain, penalty, two_matroid, laminar or knapsack");
  bench->add_option("--mode", mode_text, "basic, improved or lmp (plain only)");
  bench->add_option("--params", params_text, "Generator key=value list; matroid cycles by seed if unset");
  bench->add_option("--epsilon", epsilon_text, "Knapsack guess grid step, as p/q");

  auto* check = app.add_subcommand("check", "Validate an instance file");
  check->add_option("file", file, "Instance JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto options = [&]() {
    SolveOptions o;
    o.mode = parse_mode(mode_text);
    o.epsilon = parse_rational(epsilon_text);
    if (!connection_text.empty()) o.connection_guess = parse_rational(connection_text);
    if (!facility_text.empty()) o.facility_guess = parse_rational(facility_text);
    return o;
  };

  if (*solve) {
    return guarded(err, [&] {
      SolveOptions o;
      try {
        o = options();
      } catch (const Error& e) {
        err << "usage: " << e.what() << "\n";
        return static_cast<int>(kExitUsage);
      }
      auto inst = load_instance(file, err);
      if (!inst) return static_cast<int>(kExitInvalid);
      const std::string name = variant_name(inst->variant);
      if (variant_text != "auto" && variant_text != name) {
        err << "usage: --variant " << variant_text << " but the instance is " << name << "\n";
        return static_cast<int>(kExitUsage);
      }
      if (!std::holds_alternative<PlainVariant>(inst->variant) && o.mode != RoundingMode::kImproved) {
        err << "usage: --mode " << mode_name(o.mode) << " applies to plain instances only\n";
        return static_cast<int>(kExitUsage);
      }
      const SolveReport report = solve_instance(*inst, o);
      Json doc = Json::parse(solution_json(*inst, report.solution));
      doc["variant"] = name;
      doc["mode"] = std::holds_alternative<PlainVariant>(inst->variant) ? mode_name(o.mode) : "improved";
      doc["lp"] = from_rational(report.lp);
      doc["ratio_lp"] = ratio(report.solution.total(), report.lp);
      doc["valid"] = solution_violations(*inst, report.solution).empty();
      doc["certified"] = report.solution.certificate.all_hold();
      if (inst->num_facilities() <= kDefaultOracleCap) {
        const Rational opt = exact_solve(*inst).total();
        doc["opt"] = from_rational(opt);
        doc["ratio_opt"] = ratio(report.solution.total(), opt);
      }
      out << doc.dump(2) << "\n";
      return static_cast<int>(kExitOk);
    });
  }
  if (*exact) {
    return guarded(err, [&] {
      auto inst = load_instance(file, err);
      if (!inst) return static_cast<int>(kExitInvalid);
      Json doc = Json::parse(solution_json(*inst, exact_solve(*inst, cap)));
      doc["variant"] = variant_name(inst->variant);
      doc.erase("certificate");
      if (std::holds_alternative<IntersectionVariant>(inst->variant) &&
          inst->num_facilities() <= kZeroCostDecisionCap) {
        doc["zero_cost"] = exact_zero_cost_decision(*inst);
      }
      out << doc.dump(2) << "\n";
      return static_cast<int>(kExitOk);
    });
  }
  if (*reduce) {
    return guarded(err, [&] {
      auto [inst, mapping] = reduce_document(kind, read_file(source));
      const auto problems = validate(inst);
      for (const auto& p : problems) err << "invalid: " << p << "\n";
      if (!problems.empty()) return static_cast<int>(kExitInvalid);
      write_file(target, serialize_instance(inst));
      write_file(target + ".mapping.json", serialize_mapping(mapping) + "\n");
      out << "wrote " << target << " (" << inst.num_facilities() << " facilities, " << inst.num_clients()
          << " clients)\n";
      return static_cast<int>(kExitOk);
    });
  }
  if (*gen) {
    return guarded(err, [&] {
      GeneratorParams params;
      try {
        params = parse_params(params_text);
      } catch (const Error& e) {
        err << "usage: " << e.what() << "\n";
        return static_cast<int>(kExitUsage);
      }
      const std::string text = serialize_instance(generate_random(seed, params));
      if (output.empty()) {
        out << text;
      } else {
        write_file(output, text);
      }
      return static_cast<int>(kExitOk);
    });
  }
  if (*bench) {
    return guarded(err, [&] {
      SolveOptions o;
      GeneratorParams base;
      std::pair<uint64_t, uint64_t> range;
      try {
        o = options();
        base = parse_params(params_text);
        range = parse_seed_range(seeds_text);
      } catch (const Error& e) {
        err << "usage: " << e.what() << "\n";
        return static_cast<int>(kExitUsage);
      }
      base.variant = bench_variant;
      const bool cycle = params_text.find("matroid=") == std::string::npos;
      const char* mode = bench_variant == "plain" ? mode_name(o.mode) : "improved";
      int status = kExitOk;
      out << "seed,variant,mode,lp,alg,opt,ratio_lp,ratio_opt\n";
      for (uint64_t s = range.first; s <= range.second; ++s) {
        GeneratorParams params = base;
        if (cycle) params.matroid = kMatroidKinds[s % 5];
        const MedianInstance inst = generate_random(s, params);
        out << s << "," << bench_variant << "," << mode << ",";
        try {
          const SolveReport report = solve_instance(inst, o);
          const Rational alg = report.solution.total();
          const Rational opt = exact_solve(inst).total();
          if (!solution_violations(inst, report.solution).empty() || !report.solution.certificate.all_hold()) {
            err << "seed " << s << ": infeasible output or failed certificate check\n";
            status = kExitInvalid;
          }
          out << to_string(report.lp) << "," << to_string(alg) << "," << to_string(opt) << ","
              << ratio(alg, report.lp) << "," << ratio(alg, opt) << "\n";
        } catch (const InfeasibleError&) {
          out << "infeasible,,,,\n";
        }
        if (s == range.second) break;
      }
      return status;
    });
  }
  return guarded(err, [&] {
    auto inst = load_instance(file, err);
    if (!inst) return static_cast<int>(kExitInvalid);
    out << "ok: " << variant_name(inst->variant) << " instance, " << inst->num_facilities() << " facilities, "
        << inst->num_clients() << " clients\n";
    return static_cast<int>(kExitOk);
  });
}

}  // namespace matmed
