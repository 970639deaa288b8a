// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/knapsack.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <utility>

#include "matmed/errors.hpp"
#include "matmed/relaxation.hpp"
#include "matmed/rounding.hpp"
#include "rounding_detail.hpp"

namespace matmed {
namespace {

using detail::finite_site_distance;

const KnapsackVariant& knapsack_of(const MedianInstance& instance, const char* who) {
  const auto* knap = std::get_if<KnapsackVariant>(&instance.variant);
  if (!knap) throw InvalidArgument(std::string(who) + " got a " + variant_name(instance.variant) + " instance");
  return *knap;
}

// Everything a run produces that does not depend on the guessed values
// beyond the closed set and the admissible pairs.
struct KnapsackRun {
  FractionalSolution frac;
  ConsolidatedInstance cons;
  SiteModel model;
  Neighborhoods nbhd;
  HalfSolution half;
  Clustering clustering;
  std::vector<int> special;       // centers whose G_j holds a value outside {0, 1/2, 1}
  bool special_inner_single = true;
  bool full_balls_clustered = true;
  Rational k_start, k_hat;
  Rational modified_cost;         // on the consolidated demands
  Rational merged_bound;          // 4 sum of d_k C̄_k over merged clients
  Rational weight;
  RoundedSolution sol;
};

bool half_value(const Rational& v) { return sgn(v) == 0 || v == rat(1, 2) || v == 1; }

// Lightest site among `sites` with positive value; weight then index.
int lightest(const SiteModel& model, const std::vector<Rational>& weight, const std::vector<Rational>& y,
             const FacilitySet& sites, int skip = -1) {
  int best = -1;
  for (int s : sites) {
    if (s == skip || sgn(y[s]) <= 0) continue;
    if (best < 0 || weight[model.origin[s]] < weight[model.origin[best]]) best = s;
  }
  return best;
}

int nearest_other(const MedianInstance& instance, const SiteModel& model, const std::vector<Rational>& y,
                  const FacilitySet& sites, int client, int skip) {
  int best = -1;
  for (int s : sites) {
    if (s == skip || sgn(y[s]) <= 0) continue;
    if (best < 0 || finite_site_distance(instance, model, s, client) <
                        finite_site_distance(instance, model, best, client)) {
      best = s;
    }
  }
  return best;
}

// Primary and secondary facilities with the special client's weight rules.
void assign_with_special(const MedianInstance& instance, const KnapsackVariant& knap, KnapsackRun& run) {
  HalfSolution& half = run.half;
  const int special = run.special.size() == 1 ? run.special[0] : -1;
  if (special >= 0) {
    half.primary[special] = lightest(run.model, knap.weight, half.y, run.nbhd.inner[special]);
  }
  for (int j : run.cons.centers) {
    const int p = half.primary[j];
    int& second = half.secondary[j];
    if (half.y[p] >= 1) {
      second = p;
    } else if (half.sigma[j] != j) {
      second = half.sigma[j] >= 0 ? half.primary[half.sigma[j]] : -1;
    } else if (j != special) {
      second = nearest_other(instance, run.model, half.y, run.nbhd.ball[j], j, p);
    } else {
      second = lightest(run.model, knap.weight, half.y, run.nbhd.ball[j]);
    }
    const Rational c1 = finite_site_distance(instance, run.model, p, j);
    half.chat[j] = second < 0 || second == p
                       ? c1
                       : (c1 + finite_site_distance(instance, run.model, second, j)) / 2;
  }
}

KnapsackRun run_once(const MedianInstance& instance, const std::vector<bool>& closed,
                     const std::vector<bool>& admissible) {
  const KnapsackVariant& knap = knapsack_of(instance, "round_knapsack_once");
  const int nf = instance.num_facilities();
  const int nc = instance.num_clients();
  KnapsackRun run;
  RelaxationOptions options;
  options.closed = closed;
  options.admissible = [&](int i, int j) { return admissible[static_cast<size_t>(i) * nc + j]; };
  run.frac = solve_relaxation(instance, options);
  run.cons = consolidate_demands(instance, run.frac);

  for (int i = 0; i < nf; ++i) {
    if (!closed[i]) run.model.origin.push_back(i);
  }
  Row weight_row;
  for (int s = 0; s < run.model.size(); ++s) weight_row.terms.emplace_back(s, knap.weight[run.model.origin[s]]);
  weight_row.sense = Sense::kLessEqual;
  weight_row.rhs = knap.budget;
  weight_row.tag = RowTag::kKnapsack;
  run.model.seed_rows.push_back(std::move(weight_row));
  run.nbhd = build_neighborhoods(instance, run.cons, run.model);

  const TWeights weights{2, 2, 8};
  LinearObjective k = t_objective(instance, run.cons, run.nbhd, run.model, weights);
  run.half = half_integralize(instance, run.cons, run.nbhd, run.model,
                              neighborhood_start(run.cons, run.nbhd, run.model, run.frac), k,
                              RoundingMode::kImproved);
  run.k_start = run.half.t_start;
  run.k_hat = run.half.t_value;

  for (int j : run.cons.centers) {
    const auto& ball = run.nbhd.ball[j];
    if (!std::all_of(ball.begin(), ball.end(), [&](int s) { return half_value(run.half.y[s]); })) {
      run.special.push_back(j);
    }
  }
  if (run.special.size() == 1) {
    const int s = run.special[0];
    const Rational mass = detail::sum_over(run.half.y, run.nbhd.ball[s]);
    if (rat(1, 2) < mass && mass < 1) {
      int positive = 0;
      for (int site : run.nbhd.inner[s]) positive += sgn(run.half.y[site]) > 0 ? 1 : 0;
      run.special_inner_single = positive == 1;
    }
  }
  assign_with_special(instance, knap, run);
  run.clustering = cluster_centers(instance, run.cons, run.model, run.half, RoundingMode::kImproved);
  for (int j : run.cons.centers) {
    if (run.half.sigma[j] == j && run.clustering.ctr[j] != j) run.full_balls_clustered = false;
  }

  // Lightest facility of each cluster, then nearest open for everyone.
  FacilitySet open;
  for (int j : run.clustering.centers) {
    FacilitySet sj = run.half.support(j);
    int pick = sj[0];
    for (int s : sj) {
      if (knap.weight[run.model.origin[s]] < knap.weight[run.model.origin[pick]]) pick = s;
    }
    open.push_back(run.model.origin[pick]);
  }
  run.sol.open = make_set(open);
  assign_nearest(instance, run.sol);

  for (int i : run.sol.open) {
    run.weight += knap.weight[i];
    run.modified_cost += instance.open_cost[i];
  }
  for (int j : run.cons.centers) {
    Distance best;
    for (int i : run.sol.open) {
      const Distance& d = instance.distance(i, j);
      if (d && (!best || *d < *best)) best = d;
    }
    if (best) run.modified_cost += run.cons.demand[j] * *best;
  }
  for (int k = 0; k < nc; ++k) {
    if (run.cons.center_of[k] >= 0 && !run.cons.is_center(k)) {
      run.merged_bound += 4 * instance.demand[k] * run.frac.cbar[k];
    }
  }
  return run;
}

std::vector<bool> closed_for(const MedianInstance& instance, const Rational& facility) {
  const KnapsackVariant& knap = knapsack_of(instance, "knapsack rounding");
  std::vector<bool> closed(instance.num_facilities());
  for (int i = 0; i < instance.num_facilities(); ++i) {
    closed[i] = knap.weight[i] > knap.budget || instance.open_cost[i] > facility;
  }
  return closed;
}

std::vector<bool> admissible_for(const MedianInstance& instance, const KnapsackGuess& guess) {
  const int nf = instance.num_facilities();
  const int nc = instance.num_clients();
  std::vector<bool> ok(static_cast<size_t>(nf) * nc);
  for (int i = 0; i < nf; ++i) {
    for (int j = 0; j < nc; ++j) {
      const Distance& d = instance.distance(i, j);
      ok[static_cast<size_t>(i) * nc + j] = d && (!guess.radius[j] || *d <= *guess.radius[j]);
    }
  }
  return ok;
}

RoundedSolution certified(const MedianInstance& instance, const KnapsackRun& run,
                          const KnapsackGuess& guess) {
  const KnapsackVariant& knap = std::get<KnapsackVariant>(instance.variant);
  RoundedSolution sol = run.sol;
  CertificateTrail& cert = sol.certificate;
  const Rational& lp = run.frac.objective;
  cert.record("lp", lp);
  cert.record("guess_connection", guess.connection);
  cert.record("guess_facility", guess.facility);
  cert.record("opt_prime", run.cons.opt_prime);
  cert.record("k_start", run.k_start);
  cert.record("k_hat", run.k_hat);
  cert.record("special_clients", Rational(static_cast<long>(run.special.size())));
  cert.record("modified_cost", run.modified_cost);
  cert.record("weight", run.weight);
  cert.record("cost", sol.total());

  detail::check_consolidation(cert, run.cons);
  cert.check("opt_prime_le_lp", run.cons.opt_prime, lp);
  cert.check("k_start_le_8_opt_prime", run.k_start, 8 * run.cons.opt_prime);
  cert.check("k_hat_le_k_start", run.k_hat, run.k_start);
  detail::check_flag(cert, "half_vertex_extreme", run.half.extreme);
  cert.check("at_most_one_special_client", Rational(static_cast<long>(run.special.size())), Rational(1));
  detail::check_flag(cert, "special_single_inner_site", run.special_inner_single);
  detail::check_flag(cert, "full_balls_are_cluster_centers", run.full_balls_clustered);
  Rational radius_demand = 0;
  for (int j : run.cons.centers) {
    if (guess.radius[j]) radius_demand = std::max(radius_demand, Rational(run.cons.demand[j] * *guess.radius[j]));
  }
  cert.check("radius_demand_le_guess_bound", radius_demand, guess.connection + 4 * lp);
  cert.check("weight_le_budget", run.weight, knap.budget);
  cert.check("modified_cost_le_guess_bound", run.modified_cost,
             run.k_hat + guess.facility + 4 * guess.connection + 16 * lp);
  cert.check("lift_extra_le_merged_bound", sol.total() - run.modified_cost, run.merged_bound);
  bool served = true;
  for (int j = 0; j < instance.num_clients(); ++j) {
    if (sgn(instance.demand[j]) > 0 && !sol.assignment[j]) served = false;
  }
  detail::check_flag(cert, "all_clients_served", served);
  detail::check_flag(cert, "open_set_feasible", solution_violations(instance, sol).empty());
  return sol;
}

}  // namespace

std::vector<Distance> compute_radii(const MedianInstance& instance, const Rational& connection) {
  if (sgn(connection) < 0) throw InvalidArgument("connection guess must be non-negative");
  const int nc = instance.num_clients();
  const std::vector<Distance> between = client_distances(instance);
  std::vector<Distance> out(nc);
  for (int j = 0; j < nc; ++j) {
    std::vector<std::pair<Rational, Rational>> points;  // (c_jk, d_k)
    for (int k = 0; k < nc; ++k) {
      const Distance& d = between[static_cast<size_t>(j) * nc + k];
      if (d && sgn(instance.demand[k]) > 0) points.emplace_back(*d, instance.demand[k]);
    }
    if (points.empty()) continue;
    std::sort(points.begin(), points.end());
    Rational mass = 0, moment = 0;
    for (size_t t = 0; t < points.size(); ++t) {
      mass += points[t].second;
      moment += points[t].second * points[t].first;
      Rational z = (connection + moment) / mass;
      if (t + 1 == points.size() || z <= points[t + 1].first) {
        out[j] = z;
        break;
      }
    }
  }
  return out;
}

KnapsackGuess make_guess(const MedianInstance& instance, const Rational& connection,
                         const Rational& facility) {
  return {connection, facility, compute_radii(instance, connection)};
}

RoundedSolution round_knapsack_once(const MedianInstance& instance, const KnapsackGuess& guess) {
  knapsack_of(instance, "round_knapsack_once");
  if (static_cast<int>(guess.radius.size()) != instance.num_clients()) {
    throw InvalidArgument("guess radii do not match the client count");
  }
  KnapsackRun run = run_once(instance, closed_for(instance, guess.facility), admissible_for(instance, guess));
  return certified(instance, run, guess);
}

std::vector<Rational> connection_grid(const MedianInstance& instance, const Rational& epsilon) {
  if (sgn(epsilon) <= 0) throw InvalidArgument("epsilon must be positive");
  const KnapsackVariant& knap = knapsack_of(instance, "connection_grid");
  std::optional<Rational> lo;
  Rational far = 0, total = 0;
  for (int j = 0; j < instance.num_clients(); ++j) total += instance.demand[j];
  for (int i = 0; i < instance.num_facilities(); ++i) {
    if (knap.weight[i] > knap.budget) continue;
    for (int j = 0; j < instance.num_clients(); ++j) {
      const Distance& d = instance.distance(i, j);
      if (!d) continue;
      far = std::max(far, *d);
      const Rational cost = instance.demand[j] * *d;
      if (sgn(cost) > 0 && (!lo || cost < *lo)) lo = cost;
    }
  }
  std::vector<Rational> grid{Rational(0)};
  if (!lo) return grid;
  const Rational hi = total * far;
  const Rational step = 1 + epsilon;
  Rational value = *lo;
  for (;;) {
    grid.push_back(value);
    if (value >= hi) break;
    value *= step;
  }
  return grid;
}

std::vector<Rational> facility_grid(const MedianInstance& instance) {
  const KnapsackVariant& knap = knapsack_of(instance, "facility_grid");
  std::vector<Rational> values;
  for (int i = 0; i < instance.num_facilities(); ++i) {
    if (knap.weight[i] <= knap.budget) values.push_back(instance.open_cost[i]);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

RoundedSolution knapsack_median(const MedianInstance& instance, const Rational& epsilon) {
  knapsack_of(instance, "knapsack_median");
  const std::vector<Rational> connections = connection_grid(instance, epsilon);
  const std::vector<Rational> facilities = facility_grid(instance);

  // Runs depend on the guess only through the closed set and admissible pairs.
  std::map<std::pair<std::vector<bool>, std::vector<bool>>, std::shared_ptr<const KnapsackRun>> cache;
  std::shared_ptr<const KnapsackRun> best;
  KnapsackGuess best_guess;
  long tried = 0;
  for (const Rational& facility : facilities) {
    const std::vector<bool> closed = closed_for(instance, facility);
    for (const Rational& connection : connections) {
      KnapsackGuess guess = make_guess(instance, connection, facility);
      ++tried;
      auto key = std::make_pair(closed, admissible_for(instance, guess));
      auto it = cache.find(key);
      if (it == cache.end()) {
        std::shared_ptr<const KnapsackRun> run;
        try {
          run = std::make_shared<const KnapsackRun>(run_once(instance, closed, key.second));
        } catch (const InfeasibleError&) {
        }
        it = cache.emplace(std::move(key), std::move(run)).first;
      }
      const auto& run = it->second;
      if (run && (!best || run->sol.total() < best->sol.total())) {
        best = run;
        best_guess = std::move(guess);
      }
    }
  }
  if (!best) throw InfeasibleError("no guess gives a feasible knapsack LP");
  RoundedSolution sol = certified(instance, *best, best_guess);
  sol.certificate.record("guesses_tried", Rational(tried));
  sol.certificate.record("distinct_runs", Rational(static_cast<long>(cache.size())));
  return sol;
}

}  // namespace matmed
