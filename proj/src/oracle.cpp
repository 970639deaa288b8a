// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/oracle.hpp"

#include <cstdint>

#include "matmed/errors.hpp"

namespace matmed {
namespace {

FacilitySet members(uint32_t mask, int n) {
  FacilitySet out;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

// Cost of `open` with nearest assignment; nullopt when a client with demand
// has neither an open facility nor a penalty.
std::optional<Rational> nearest_cost(const MedianInstance& instance, const FacilitySet& open) {
  const auto* pv = std::get_if<PenaltyVariant>(&instance.variant);
  Rational cost = 0;
  for (int i : open) cost += instance.open_cost[i];
  for (int j = 0; j < instance.num_clients(); ++j) {
    if (sgn(instance.demand[j]) == 0) continue;
    std::optional<Rational> best;
    for (int i : open) {
      const Distance& d = instance.distance(i, j);
      if (d && (!best || *d < *best)) best = *d;
    }
    if (pv && (!best || pv->penalty[j] < *best)) best = pv->penalty[j];
    if (!best) return std::nullopt;
    cost += instance.demand[j] * *best;
  }
  return cost;
}

}  // namespace

RoundedSolution exact_solve(const MedianInstance& instance, int max_facilities) {
  const int nf = instance.num_facilities();
  if (nf > max_facilities) {
    throw SizeCapError("exact solver limited to " + std::to_string(max_facilities) + " facilities, got " +
                       std::to_string(nf));
  }
  std::optional<Rational> best_cost;
  FacilitySet best_open;
  for (uint32_t mask = 0; mask < (uint32_t{1} << nf); ++mask) {
    FacilitySet open = members(mask, nf);
    const std::optional<Rational> cost = nearest_cost(instance, open);
    if (!cost) continue;
    if (best_cost && (*cost > *best_cost || (*cost == *best_cost && open >= best_open))) continue;
    if (!open_set_violations(instance, open).empty()) continue;
    best_cost = cost;
    best_open = std::move(open);
  }
  if (!best_cost) throw InfeasibleError("no feasible open set");
  RoundedSolution sol;
  sol.open = best_open;
  assign_nearest(instance, sol);
  return sol;
}

bool exact_zero_cost_decision(const MedianInstance& instance) {
  const auto* inter = std::get_if<IntersectionVariant>(&instance.variant);
  if (!inter) {
    throw InvalidArgument("zero-cost decision needs an intersection instance, got " +
                          variant_name(instance.variant));
  }
  const int nf = instance.num_facilities();
  const int nc = instance.num_clients();
  if (nf > kZeroCostDecisionCap) {
    throw SizeCapError("zero-cost decision limited to " + std::to_string(kZeroCostDecisionCap) +
                       " facilities, got " + std::to_string(nf));
  }
  // Facilities reaching each client at zero cost, as a bitmask.
  std::vector<uint32_t> zero_at(nc, 0);
  for (int j = 0; j < nc; ++j) {
    for (int i = 0; i < nf; ++i) {
      const Distance& d = instance.distance(i, j);
      if (d && sgn(*d) == 0) zero_at[j] |= uint32_t{1} << i;
    }
  }
  for (uint32_t mask = 0; mask < (uint32_t{1} << nf); ++mask) {
    bool covers = true;
    for (int j = 0; j < nc && covers; ++j) {
      covers = sgn(instance.demand[j]) == 0 || (zero_at[j] & mask) != 0;
    }
    if (!covers) continue;
    bool zero = true;
    for (int i = 0; i < nf && zero; ++i) zero = !(mask >> i & 1) || sgn(instance.open_cost[i]) == 0;
    if (!zero) continue;
    const FacilitySet open = members(mask, nf);
    if (is_independent(instance.matroid, open) && is_independent(inter->matroid2, open)) return true;
  }
  return false;
}

}  // namespace matmed
