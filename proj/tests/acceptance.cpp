// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matmed/cli.hpp"
#include "matmed/errors.hpp"
#include "matmed/extensions.hpp"
#include "matmed/knapsack.hpp"
#include "matmed/oracle.hpp"
#include "matmed/reductions.hpp"
#include "matmed/relaxation.hpp"
#include "matmed/rounding.hpp"
#include "support/source_oracles.hpp"
#include "support/test_support.hpp"

namespace matmed {
namespace {

const char* const kKinds[] = {"uniform", "partition", "laminar", "graphic", "explicit"};

// Collects failures of one criterion; the first few are printed.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) fail(what);
  }
  bool passed() const { return failed_ == 0; }
  int failed() const { return failed_; }
  int checked() const { return checked_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
  int failed_ = 0;
  int checked_ = 0;
};

struct Outcome {
  bool passed;
  std::string summary;
};

Outcome outcome(const Tally& t, std::string summary) {
  for (const auto& f : t.failures()) summary += "\n    " + f;
  return {t.passed(), summary};
}

std::string label(const char* what, uint64_t seed) { return std::string(what) + " seed " + std::to_string(seed); }

bool check_holds(const RoundedSolution& sol, const std::string& name) {
  const auto* c = sol.certificate.find_check(name);
  return c && c->holds();
}

std::string first_failure(const RoundedSolution& sol) {
  const auto f = sol.certificate.failures();
  return f.empty() ? "" : " (" + f.front() + ")";
}

GeneratorParams sized(uint64_t seed, const char* variant, int max_facilities, int max_clients) {
  GeneratorParams params;
  params.facilities = 4 + static_cast<int>(seed % (max_facilities - 3));
  params.clients = 3 + static_cast<int>((seed / 7) % (max_clients - 2));
  params.matroid = kKinds[seed % 5];
  params.variant = variant;
  params.metric = seed % 2 ? "grid" : "line";
  return params;
}

// ---- Suites 1-3: plain instances, improved and basic modes ----

struct PlainRun {
  uint64_t seed;
  MedianInstance instance;
  Rational lp;
  Rational opt;
  RoundedSolution improved;
  RoundedSolution basic;
};

std::vector<PlainRun> plain_runs;
double plain_seconds = 0;

void run_plain_suite() {
  const auto start = std::chrono::steady_clock::now();
  for (uint64_t seed = 0; seed < 500; ++seed) {
    PlainRun run;
    run.seed = seed;
    run.instance = generate_random(seed, sized(seed, "plain", 10, 8));
    const FractionalSolution frac = solve_relaxation(run.instance);
    run.lp = frac.objective;
    run.opt = exact_solve(run.instance).total();
    run.improved = round_matroid_median(run.instance, frac, RoundingMode::kImproved);
    run.basic = round_matroid_median(run.instance, frac, RoundingMode::kBasic);
    plain_runs.push_back(std::move(run));
  }
  plain_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome criterion_ratio_suite() {
  Tally t;
  for (const auto& r : plain_runs) {
    const Rational cost = r.improved.total();
    t.expect(cost <= 8 * r.lp, label("cost > 8 LP,", r.seed));
    t.expect(cost <= 8 * r.opt, label("cost > 8 OPT,", r.seed));
    t.expect(cost >= r.opt, label("cost below the optimum,", r.seed));
    t.expect(solution_violations(r.instance, r.improved).empty(), label("violations,", r.seed));
    t.expect(r.improved.certificate.all_hold(), label("certificate", r.seed) + first_failure(r.improved));
  }
  t.expect(plain_seconds <= 600, "runtime above 10 minutes");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f s", plain_seconds);
  return outcome(t, std::to_string(plain_runs.size()) + " instances, " + buf);
}

Outcome criterion_basic_suite() {
  Tally t;
  for (const auto& r : plain_runs) {
    t.expect(r.basic.total() <= 10 * r.lp, label("cost > 10 LP,", r.seed));
    t.expect(check_holds(r.basic, "t_start_le_3_opt_prime"), label("T bound,", r.seed));
    t.expect(check_holds(r.basic, "h_start_le_2_half_cost"), label("H bound,", r.seed));
    t.expect(solution_violations(r.instance, r.basic).empty(), label("violations,", r.seed));
    t.expect(r.basic.certificate.all_hold(), label("certificate", r.seed) + first_failure(r.basic));
  }
  return outcome(t, std::to_string(plain_runs.size()) + " instances");
}

Outcome criterion_improved_chain() {
  Tally t;
  const char* chain[] = {"consolidated_cost_le_h_tilde", "h_tilde_le_h_start", "h_start_le_t_hat",
                         "t_hat_le_t_start", "t_start_le_4_opt_prime"};
  for (const auto& r : plain_runs) {
    for (const char* link : chain) t.expect(check_holds(r.improved, link), label(link, r.seed));
  }
  return outcome(t, std::to_string(t.checked()) + " chain links");
}

// ---- Suite 4: LMP ----

std::vector<RoundedSolution> crash_outputs;  // runs whose certificates carry half_integral

Outcome criterion_lmp() {
  Tally t;
  for (uint64_t seed = 1000; seed < 1200; ++seed) {
    const MedianInstance inst = generate_random(seed, sized(seed, "plain", 10, 8));
    const FractionalSolution frac = solve_relaxation(inst);
    const RoundedSolution sol = round_matroid_median(inst, frac, RoundingMode::kLmp);
    t.expect(8 * sol.facility_cost + sol.connection_cost <= 8 * frac.objective, label("8F + C > 8 LP,", seed));
    t.expect(solution_violations(inst, sol).empty(), label("violations,", seed));
    t.expect(sol.certificate.all_hold(), label("certificate", seed) + first_failure(sol));
    crash_outputs.push_back(sol);
  }
  return outcome(t, "200 instances");
}

// ---- Suite 5: half-integrality ----

// Neighborhoods of the split pipeline: G'_j from the clones, F'_j inside it.
struct SplitSystems {
  LinearSystem half;
  SiteModel model;
  ConsolidatedInstance cons;
  Neighborhoods nbhd;
  ClonedSolution cloned;
};

SplitSystems split_systems(const MedianInstance& inst, const FractionalSolution& frac) {
  SplitSystems s;
  s.cons = consolidate_demands(inst, frac);
  const Neighborhoods plain = build_neighborhoods(inst, s.cons, matroid_site_model(inst));
  s.cloned = clone_facilities(inst, s.cons, plain, frac);
  s.model = split_site_model(inst, s.cloned.map);
  s.nbhd = build_neighborhoods(inst, s.cons, s.model);
  for (int j : s.cons.centers) {
    s.nbhd.ball[j] = s.cloned.ball[j];
    FacilitySet inner;
    std::set_intersection(s.nbhd.inner[j].begin(), s.nbhd.inner[j].end(), s.cloned.ball[j].begin(),
                          s.cloned.ball[j].end(), std::back_inserter(inner));
    s.nbhd.inner[j] = std::move(inner);
  }
  s.half = half_polytope(s.cons, s.nbhd, s.model);
  return s;
}

Outcome criterion_half_integrality() {
  Tally t;
  int flags = 0;
  auto flag = [&](const RoundedSolution& sol, const std::string& what) {
    if (sol.certificate.find_check("half_integral")) {
      ++flags;
      t.expect(check_holds(sol, "half_integral"), what + " half_integral");
      t.expect(check_holds(sol, "integral_vertex"), what + " integral_vertex");
    }
  };
  for (const auto& r : plain_runs) {
    flag(r.improved, label("improved", r.seed));
    flag(r.basic, label("basic", r.seed));
  }
  for (size_t k = 0; k < crash_outputs.size(); ++k) flag(crash_outputs[k], label("crash output", k));

  // Plain systems over at most six sites and split systems over at most ten.
  int plain_systems = 0, split_count = 0, vertices = 0;
  for (uint64_t seed = 3000; plain_systems < 25 && seed < 4000; ++seed) {
    GeneratorParams params;
    params.facilities = 4 + static_cast<int>(seed % 3);
    params.clients = 3 + static_cast<int>(seed % 2);
    params.matroid = kKinds[seed % 3];
    params.metric = seed % 2 ? "grid" : "line";
    const MedianInstance inst = generate_random(seed, params);
    const FractionalSolution frac = solve_relaxation(inst);
    const ConsolidatedInstance cons = consolidate_demands(inst, frac);
    const SiteModel model = matroid_site_model(inst);
    const Neighborhoods nbhd = build_neighborhoods(inst, cons, model);
    for (const auto& v : testing::vertices_with_cuts(half_polytope(cons, nbhd, model), model.separators)) {
      t.expect(certify_denominators(v.values, {1, 2}), label("half polytope vertex", seed));
      ++vertices;
    }
    const HalfSolution half = half_integralize(inst, cons, nbhd, frac, RoundingMode::kImproved);
    const Clustering clustering = cluster_centers(inst, cons, model, half, RoundingMode::kImproved);
    for (const auto& v : testing::vertices_with_cuts(cluster_polytope(model, half, clustering), model.separators)) {
      t.expect(certify_denominators(v.values, {1}), label("cluster polytope vertex", seed));
      ++vertices;
    }
    ++plain_systems;
  }
  for (uint64_t seed = 5000; split_count < 25 && seed < 7000; ++seed) {
    GeneratorParams params;
    params.facilities = 4 + static_cast<int>(seed % 2);
    params.clients = 3;
    params.matroid = kKinds[seed % 3];
    params.variant = seed % 2 ? "two_matroid" : "laminar";
    params.metric = seed % 3 ? "grid" : "line";
    const MedianInstance inst = generate_random(seed, params);
    FractionalSolution frac;
    try {
      frac = solve_relaxation(inst);
    } catch (const InfeasibleError&) {
      continue;
    }
    SplitSystems s = split_systems(inst, frac);
    if (s.model.size() > 10) continue;
    for (const auto& v : testing::vertices_with_cuts(s.half, s.model.separators)) {
      t.expect(certify_denominators(v.values, {1, 2}), label("split half polytope vertex", seed));
      ++vertices;
    }
    const HalfSolution half =
        half_integralize(inst, s.cons, s.nbhd, s.model, s.cloned.y,
                         t_objective(inst, s.cons, s.nbhd, s.model, t_weights(RoundingMode::kImproved)),
                         RoundingMode::kImproved);
    const Clustering clustering = cluster_centers(inst, s.cons, s.model, half, RoundingMode::kImproved);
    for (const auto& v :
         testing::vertices_with_cuts(cluster_polytope(s.model, half, clustering), s.model.separators)) {
      t.expect(certify_denominators(v.values, {1}), label("split cluster polytope vertex", seed));
      ++vertices;
    }
    ++split_count;
  }
  t.expect(plain_systems + split_count == 50, "fewer than 50 enumerated systems");
  return outcome(t, std::to_string(flags) + " crash outputs, " + std::to_string(plain_systems + split_count) +
                          " systems, " + std::to_string(vertices) + " vertices");
}

// ---- Suite 6: penalties ----

Outcome criterion_penalty() {
  Tally t;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const MedianInstance inst = generate_random(seed, sized(seed, "penalty", 10, 8));
    const FractionalSolution frac = solve_relaxation(inst);
    const RoundedSolution sol = round_with_penalties(inst, frac);
    t.expect(sol.total() <= 24 * frac.objective, label("cost > 24 LP,", seed));
    t.expect(check_holds(sol, "opt_prime_le_5_opt_double_prime"), label("bookkeeping,", seed));
    t.expect(solution_violations(inst, sol).empty(), label("violations,", seed));
    t.expect(sol.certificate.all_hold(), label("certificate", seed) + first_failure(sol));
    crash_outputs.push_back(sol);
  }
  return outcome(t, "300 instances");
}

// ---- Suite 7: two matroids and laminar families ----

Outcome criterion_split_variants() {
  Tally t;
  int infeasible = 0;
  for (const char* variant : {"two_matroid", "laminar"}) {
    for (uint64_t seed = 0; seed < 200; ++seed) {
      const MedianInstance inst = generate_random(seed, sized(seed, variant, 10, 8));
      FractionalSolution frac;
      try {
        frac = solve_relaxation(inst);
      } catch (const InfeasibleError&) {
        ++infeasible;
        continue;
      }
      const RoundedSolution sol = round_split(inst, frac);
      const std::string what = std::string(variant) + " seed " + std::to_string(seed);
      t.expect(sol.total() <= 8 * frac.objective, what + " cost > 8 LP");
      t.expect(solution_violations(inst, sol).empty(), what + " violations");
      t.expect(sol.certificate.all_hold(), what + " certificate" + first_failure(sol));
      crash_outputs.push_back(sol);
    }
  }
  t.expect(infeasible == 0, "generator produced infeasible split instances");
  return outcome(t, "400 instances");
}

// ---- Suite 8: knapsack ----

Outcome criterion_knapsack() {
  Tally t;
  const Rational epsilon = rat(1, 10);
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const MedianInstance inst = generate_random(seed, sized(seed, "knapsack", 8, 6));
    const RoundedSolution sol = knapsack_median(inst, epsilon);
    const Rational opt = exact_solve(inst).total();
    const auto& v = std::get<KnapsackVariant>(inst.variant);
    Rational weight = 0;
    for (int i : sol.open) weight += v.weight[i];
    t.expect(sol.total() <= 32 * (1 + epsilon) * opt, label("cost > 32(1+eps) OPT,", seed));
    t.expect(weight <= v.budget, label("over budget,", seed));
    t.expect(check_holds(sol, "at_most_one_special_client"), label("special clients,", seed));
    t.expect(check_holds(sol, "radius_demand_le_guess_bound"), label("radius bound,", seed));
    t.expect(solution_violations(inst, sol).empty(), label("violations,", seed));
    t.expect(sol.certificate.all_hold(), label("certificate", seed) + first_failure(sol));
  }
  return outcome(t, "200 instances");
}

// ---- Suite 9: reductions ----

Outcome criterion_reductions() {
  Tally t;
  int duplicate_slots = 0, infeasible_placements = 0;
  std::mt19937_64 rng(2718);

  for (int round = 0; round < 50; ++round) {
    const DataPlacementProblem p = testing::random_data_placement(rng);
    auto [inst, map] = reduce_data_placement(p);
    const auto brute = testing::brute_data_placement(p);
    const std::string what = "data placement round " + std::to_string(round);
    if (!brute) {
      ++infeasible_placements;
      bool threw = false;
      try {
        exact_solve(inst);
      } catch (const InfeasibleError&) {
        threw = true;
      }
      t.expect(threw, what + " reduced instance feasible");
      continue;
    }
    t.expect(exact_solve(inst).total() + map.cost_offset == *brute, what + " optimum");
    const RoundedSolution approx = round_matroid_median(inst, RoundingMode::kImproved);
    const DataPlacementSolution lifted = lift_data_placement(p, map, approx);
    bool feasible = true;
    for (size_t c = 0; c < p.caches.size(); ++c) {
      feasible &= static_cast<int>(lifted.stored[c].size()) <= p.capacity[c];
    }
    for (size_t j = 0; j < p.clients.size(); ++j) {
      const auto& stored = lifted.stored[lifted.cache_of[j]];
      feasible &= std::binary_search(stored.begin(), stored.end(), p.object_of[j]);
    }
    t.expect(feasible, what + " lifted solution infeasible");
    t.expect(data_placement_cost(p, lifted) == approx.total() + map.cost_offset, what + " lifted cost");
  }

  for (int round = 0; round < 50; ++round) {
    const MobileFacilityProblem p = testing::random_mobile_facility(rng);
    auto [inst, map] = reduce_mobile_facility(p);
    const std::string what = "mobile facility round " + std::to_string(round);
    t.expect(exact_solve(inst).total() + map.cost_offset == testing::brute_mobile_facility(p), what + " optimum");
    const RoundedSolution approx = round_matroid_median(inst, RoundingMode::kImproved);
    const MobileFacilitySolution lifted = lift_mobile_facility(p, map, approx);
    bool feasible = lifted.location.size() == p.facilities.size();
    for (int f : lifted.facility_of) feasible &= f >= 0 && f < static_cast<int>(p.facilities.size());
    t.expect(feasible, what + " lifted solution infeasible");
    t.expect(mobile_facility_cost(p, lifted) == approx.total() + map.cost_offset, what + " lifted cost");
  }

  for (int round = 0; round < 50; ++round) {
    const KMedianForestProblem p = testing::random_kmedian_forest(rng);
    auto [inst, map] = reduce_kmedian_forest(p);
    const std::string what = "k-median forest round " + std::to_string(round);
    t.expect(exact_solve(inst).total() + map.cost_offset == testing::brute_kmedian_forest(p), what + " optimum");
    const RoundedSolution approx = round_two_matroid(inst);
    const KMedianForestSolution lifted = lift_kmedian_forest(p, map, approx);
    const int n = static_cast<int>(p.nodes.size());
    bool feasible = static_cast<int>(lifted.medians.size()) <= p.k && !lifted.medians.empty() &&
                    static_cast<int>(lifted.median_of.size()) == n;
    // The forest is acyclic, every tree holds a median, and nodes pick medians.
    std::vector<int> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = v;
    std::function<int(int)> find = [&](int v) { return comp[v] == v ? v : comp[v] = find(comp[v]); };
    for (const auto& [u, v] : lifted.forest) {
      feasible &= find(u) != find(v);
      comp[find(u)] = find(v);
    }
    std::vector<bool> rooted(n, false);
    for (int m : lifted.medians) rooted[find(m)] = true;
    for (int v = 0; v < n && feasible; ++v) {
      feasible &= rooted[find(v)] &&
                  std::binary_search(lifted.medians.begin(), lifted.medians.end(), lifted.median_of[v]);
    }
    t.expect(feasible, what + " lifted solution infeasible");
    t.expect(kmedian_forest_cost(p, lifted) == approx.total() + map.cost_offset, what + " lifted cost");
  }

  for (int round = 0; round < 50; ++round) {
    const MinLatencyProblem p = testing::random_min_latency(rng);
    auto [inst, map] = reduce_min_latency(p);
    const std::string what = "min latency round " + std::to_string(round);
    t.expect(exact_solve(inst).total() + map.cost_offset == testing::brute_min_latency(p), what + " optimum");
    const RoundedSolution approx = round_matroid_median(inst, RoundingMode::kImproved);
    const MinLatencySolution lifted = lift_min_latency(p, map, approx);
    std::vector<int> used(p.facilities.size());
    bool duplicate = false;
    for (int i : approx.open) duplicate |= used[map.facility_source[i].first]++ > 0;
    duplicate_slots += duplicate;
    bool feasible = true;
    std::vector<int> taken(p.facilities.size(), 0);
    for (int s : lifted.slot) {
      if (s >= 0) feasible &= taken[s]++ == 0;
    }
    for (size_t j = 0; j < p.clients.size(); ++j) feasible &= lifted.slot[lifted.facility_of[j]] >= 0;
    t.expect(feasible, what + " lifted solution infeasible");
    const Rational cost = min_latency_cost(p, lifted);
    const Rational reduced = approx.total() + map.cost_offset;
    t.expect(duplicate ? cost <= reduced : cost == reduced, what + " lifted cost");
  }
  return outcome(t, "200 source problems, " + std::to_string(infeasible_placements) +
                          " infeasible placements agreed, " + std::to_string(duplicate_slots) +
                          " latency runs with a facility in two slots");
}

// ---- Suite 10: hardness equivalence ----

Outcome criterion_hardness() {
  Tally t;
  auto compare = [&](const Digraph& g) {
    const bool zero = exact_zero_cost_decision(generate_hardness_instance(g));
    t.expect(zero == testing::has_hamiltonian_path(g),
             "digraph on " + std::to_string(g.nodes.size()) + " nodes with " + std::to_string(g.arcs.size()) +
                 " arcs");
  };
  int exhaustive = 0;
  for (int n = 2; n <= 4; ++n) {
    const uint32_t masks = 1u << (n * (n - 1));
    for (uint32_t mask = 0; mask < masks; ++mask) {
      for (int s = 0; s < n; ++s) {
        for (int target = 0; target < n; ++target) {
          if (s == target) continue;
          compare(testing::digraph_from_mask(n, mask, s, target));
          ++exhaustive;
        }
      }
    }
  }
  std::mt19937_64 rng(31415);
  int sampled = 0;
  while (sampled < 1000) {
    uint32_t mask = static_cast<uint32_t>(rng()) & ((1u << 20) - 1);
    if (__builtin_popcount(mask) > kZeroCostDecisionCap) continue;
    const int s = static_cast<int>(rng() % 5);
    const int target = static_cast<int>((s + 1 + rng() % 4) % 5);
    compare(testing::digraph_from_mask(5, mask, s, target));
    ++sampled;
  }
  return outcome(t, std::to_string(exhaustive) + " exhaustive digraphs on 2-4 nodes, " + std::to_string(sampled) +
                          " sampled on 5 nodes, " + std::to_string(t.failed()) + " mismatches");
}

// ---- Suite 11: determinism ----

std::string capture(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = run_cli(args, out, err);
  return out.str();
}

Outcome criterion_determinism() {
  Tally t;
  const auto dir = std::filesystem::temp_directory_path() / "matmed_acceptance";
  std::filesystem::create_directories(dir);
  int code = 0;
  const std::vector<std::vector<std::string>> benches = {
      {"bench", "--seeds", "0..49", "--variant", "plain", "--mode", "improved"},
      {"bench", "--seeds", "0..19", "--variant", "penalty"},
      {"bench", "--seeds", "0..19", "--variant", "two_matroid"},
      {"bench", "--seeds", "0..19", "--variant", "laminar"},
      {"bench", "--seeds", "0..9", "--variant", "knapsack", "--params", "facilities=6,clients=4"},
  };
  for (const auto& args : benches) {
    const std::string first = capture(args, &code);
    t.expect(code == kExitOk, "bench exit code for " + args[4]);
    t.expect(!first.empty() && first == capture(args, &code), "bench output differs for " + args[4]);
  }
  for (const char* variant : {"plain", "penalty", "two_matroid", "laminar", "knapsack"}) {
    const std::string path = (dir / (std::string(variant) + ".json")).string();
    capture({"gen", "--seed", "7", "--params", std::string("facilities=7,clients=5,variant=") + variant, "-o", path},
            &code);
    t.expect(code == kExitOk, std::string("gen failed for ") + variant);
    const std::vector<std::string> solve{"solve", path};
    const std::string first = capture(solve, &code);
    t.expect(code == kExitOk, std::string("solve failed for ") + variant);
    t.expect(!first.empty() && first == capture(solve, &code), std::string("solve output differs for ") + variant);
  }
  std::filesystem::remove_all(dir);
  return outcome(t, std::to_string(t.checked()) + " comparisons");
}

}  // namespace
}  // namespace matmed

int main() {
  using matmed::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"improved ratio suite", matmed::criterion_ratio_suite},
      {"basic ratio suite", matmed::criterion_basic_suite},
      {"improved certificate chain", matmed::criterion_improved_chain},
      {"LMP suite", matmed::criterion_lmp},
      {"half-integrality", matmed::criterion_half_integrality},
      {"penalty suite", matmed::criterion_penalty},
      {"two-matroid and laminar suite", matmed::criterion_split_variants},
      {"knapsack suite", matmed::criterion_knapsack},
      {"reduction round trips", matmed::criterion_reductions},
      {"hardness equivalence", matmed::criterion_hardness},
      {"determinism", matmed::criterion_determinism},
  };
  bool all = true;
  try {
    matmed::run_plain_suite();
  } catch (const std::exception& e) {
    std::cout << "FAIL plain suite setup: " << e.what() << std::endl;
    return 1;
  }
  // Suite 5 reads crash outputs gathered by suites 4, 6 and 7, so those run first.
  const int order[] = {0, 1, 2, 3, 5, 6, 4, 7, 8, 9, 10};
  std::vector<std::string> lines(criteria.size());
  for (int k : order) {
    Outcome outcome{false, ""};
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    all &= outcome.passed;
    lines[k] = std::string(outcome.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(k + 1) + " (" +
               criteria[k].first + "): " + outcome.summary;
  }
  for (const auto& line : lines) std::cout << line << "\n";
  return all ? 0 : 1;
}
