// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/relaxation.hpp"

#include "matmed/errors.hpp"
#include "matmed/linear_system.hpp"
#include "matmed/simplex.hpp"

namespace matmed {
namespace {

void add_count_rows(LinearSystem& lp, const FacilitySet& set, int lower, int upper) {
  if (lower > 0) lp.add_row(sum_row(set, Sense::kGreaterEqual, Rational(lower), RowTag::kBound));
  if (upper < static_cast<int>(set.size())) {
    lp.add_row(sum_row(set, Sense::kLessEqual, Rational(upper), RowTag::kBound));
  }
}

void add_bounds(LinearSystem& lp, const CardinalityBounds& b, const FacilitySet& f1,
                const FacilitySet& f2, int nf) {
  FacilitySet all(nf);
  for (int i = 0; i < nf; ++i) all[i] = i;
  add_count_rows(lp, f1, b.lb1, b.ub1);
  add_count_rows(lp, f2, b.lb2, b.ub2);
  add_count_rows(lp, all, b.lb, b.ub);
}

}  // namespace

FractionalSolution solve_relaxation(const MedianInstance& inst, const RelaxationOptions& options) {
  if (std::holds_alternative<IntersectionVariant>(inst.variant)) {
    throw InvalidArgument("matroid-intersection instances have no approximation pipeline");
  }
  const int nf = inst.num_facilities();
  const int nc = inst.num_clients();
  const auto* penalty = std::get_if<PenaltyVariant>(&inst.variant);
  const auto* two = std::get_if<TwoMatroidVariant>(&inst.variant);

  // Variable layout: y_i, then x_ij per admissible pair, then z_j.
  std::vector<int> x_var(static_cast<size_t>(nf) * nc, -1);
  std::vector<int> z_var(nc, -1);
  int next = nf;
  for (int i = 0; i < nf; ++i) {
    if (!options.closed.empty() && options.closed[i]) continue;
    for (int j = 0; j < nc; ++j) {
      const Distance& d = inst.distance(i, j);
      if (!d || sgn(inst.demand[j]) == 0) continue;
      if (penalty && *d > penalty->penalty[j]) continue;
      if (options.admissible && !options.admissible(i, j)) continue;
      x_var[static_cast<size_t>(i) * nc + j] = next++;
    }
  }
  if (penalty) {
    for (int j = 0; j < nc; ++j) {
      if (sgn(inst.demand[j]) != 0) z_var[j] = next++;
    }
  }
  LinearSystem lp(next);
  std::vector<Rational> cost(next);
  for (int i = 0; i < nf; ++i) cost[i] = inst.open_cost[i];
  for (int j = 0; j < nc; ++j) {
    if (sgn(inst.demand[j]) == 0) continue;
    Row assign;
    assign.sense = Sense::kEqual;
    assign.rhs = 1;
    assign.tag = RowTag::kAssignment;
    for (int i = 0; i < nf; ++i) {
      int v = x_var[static_cast<size_t>(i) * nc + j];
      if (v < 0) continue;
      assign.terms.emplace_back(v, Rational(1));
      cost[v] = inst.demand[j] * *inst.distance(i, j);
      Row link;
      link.terms = {{v, Rational(1)}, {i, Rational(-1)}};
      link.sense = Sense::kLessEqual;
      link.rhs = 0;
      link.tag = RowTag::kLinking;
      lp.add_row(std::move(link));
    }
    if (z_var[j] >= 0) {
      assign.terms.emplace_back(z_var[j], Rational(1));
      cost[z_var[j]] = inst.demand[j] * penalty->penalty[j];
    }
    lp.add_row(std::move(assign));
  }
  for (int i = 0; i < nf; ++i) {
    if (!options.closed.empty() && options.closed[i]) {
      lp.add_row(sum_row({i}, Sense::kEqual, Rational(0), RowTag::kBound));
    }
    lp.add_row(sum_row({i}, Sense::kLessEqual, Rational(rank(inst.matroid, {i})), RowTag::kRankCut));
    if (two && two->matroid2.contains(i)) {
      lp.add_row(sum_row({i}, Sense::kLessEqual, Rational(rank(two->matroid2, {i})), RowTag::kRankCut));
    }
  }
  if (two) add_bounds(lp, two->bounds, two->f1, two->f2, nf);
  if (const auto* lam = std::get_if<LaminarVariant>(&inst.variant)) {
    for (const auto& a : lam->family) add_count_rows(lp, a.members, a.lower, a.upper);
    add_bounds(lp, lam->bounds, lam->f1, lam->f2, nf);
  }
  if (const auto* knap = std::get_if<KnapsackVariant>(&inst.variant)) {
    Row row;
    for (int i = 0; i < nf; ++i) row.terms.emplace_back(i, knap->weight[i]);
    row.sense = Sense::kLessEqual;
    row.rhs = knap->budget;
    row.tag = RowTag::kKnapsack;
    lp.add_row(std::move(row));
  }

  FractionalSolution sol;
  sol.num_facilities = nf;
  sol.num_clients = nc;
  auto add_cut = [&](const FacilitySet& set, bool second) {
    const MatroidSpec& m = second ? two->matroid2 : inst.matroid;
    lp.add_row(sum_row(set, Sense::kLessEqual, Rational(rank(m, set)), RowTag::kRankCut));
    sol.cuts.emplace_back(set, second);
  };
  for (const auto& [set, second] : options.initial_cuts) {
    if (second && !two) throw InvalidArgument("second-matroid cut without a second matroid");
    add_cut(set, second);
  }
  RankSeparator separate_first(inst.matroid, options.separation);
  std::optional<RankSeparator> separate_second;
  if (two) separate_second.emplace(two->matroid2, options.separation);

  std::vector<Rational> values;
  for (;;) {
    ++sol.rounds;
    SimplexResult res = simplex_solve(lp, cost);
    sol.pivots += res.stats.pivots;
    values = std::move(res.vertex.values);
    std::vector<Rational> y(values.begin(), values.begin() + nf);
    bool added = false;
    if (auto v = separate_first(y)) {
      add_cut(v->set, false);
      added = true;
    }
    if (separate_second) {
      if (auto v = (*separate_second)(y)) {
        add_cut(v->set, true);
        added = true;
      }
    }
    if (!added) {
      sol.objective = res.value;
      break;
    }
  }

  sol.y.assign(values.begin(), values.begin() + nf);
  sol.x.assign(static_cast<size_t>(nf) * nc, Rational(0));
  sol.z.assign(penalty ? nc : 0, Rational(0));
  sol.assigned.assign(nc, Rational(0));
  sol.cbar.assign(nc, Rational(0));
  sol.client_cost.assign(nc, Rational(0));
  for (int j = 0; j < nc; ++j) {
    Rational connection = 0;
    for (int i = 0; i < nf; ++i) {
      int v = x_var[static_cast<size_t>(i) * nc + j];
      if (v < 0) continue;
      sol.x[static_cast<size_t>(i) * nc + j] = values[v];
      sol.assigned[j] += values[v];
      connection += values[v] * *inst.distance(i, j);
    }
    if (sgn(sol.assigned[j]) > 0) sol.cbar[j] = connection / sol.assigned[j];
    sol.client_cost[j] = connection;
    if (penalty && z_var[j] >= 0) {
      sol.z[j] = values[z_var[j]];
      sol.client_cost[j] += penalty->penalty[j] * sol.z[j];
    }
  }
  return sol;
}

}  // namespace matmed
