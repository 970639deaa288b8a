// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "matmed/errors.hpp"
#include "matmed/extensions.hpp"
#include "rounding_detail.hpp"

namespace matmed {
namespace {

// Facilities reachable from `center` within `cap`, nearest first, id on ties.
std::vector<int> by_distance(const MedianInstance& instance, int center, const FacilitySet& pool,
                             const Rational* cap) {
  std::vector<int> out;
  for (int i : pool) {
    const Distance& d = instance.distance(i, center);
    if (d && (!cap || *d <= *cap)) out.push_back(i);
  }
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
    return *instance.distance(a, center) < *instance.distance(b, center);
  });
  return out;
}

// Linear piece B_k of T: served part over N_k, the rest at min(2 pi_k, 4 gamma_j).
struct PenaltyTerm {
  FacilitySet near;  // N_k
  Rational far;      // m_k
};

}  // namespace

RoundedSolution round_with_penalties(const MedianInstance& instance) {
  if (!std::holds_alternative<PenaltyVariant>(instance.variant)) {
    throw InvalidArgument("round_with_penalties got a " + variant_name(instance.variant) + " instance");
  }
  return round_with_penalties(instance, solve_relaxation(instance));
}

RoundedSolution round_with_penalties(const MedianInstance& instance, const FractionalSolution& frac) {
  const auto* pv = std::get_if<PenaltyVariant>(&instance.variant);
  if (!pv) {
    throw InvalidArgument("round_with_penalties got a " + variant_name(instance.variant) + " instance");
  }
  const std::vector<Rational>& pi = pv->penalty;
  const std::vector<Rational>& lp = frac.client_cost;
  const RoundingMode mode = RoundingMode::kImproved;
  const int nf = instance.num_facilities();
  const int nc = instance.num_clients();
  FacilitySet all_facilities(nf);
  for (int i = 0; i < nf; ++i) all_facilities[i] = i;

  // Clients with pi_j <= 2 LP_j pay their penalty; the rest are kept.
  std::vector<bool> kept(nc, false);
  Rational upfront = 0, upfront_lp = 0;
  for (int j = 0; j < nc; ++j) {
    if (sgn(instance.demand[j]) <= 0) continue;
    kept[j] = pi[j] > 2 * lp[j];
    if (!kept[j]) {
      upfront += instance.demand[j] * pi[j];
      upfront_lp += instance.demand[j] * lp[j];
    }
  }
  ConsolidatedInstance cons = consolidate(instance, lp, kept, MergeTarget::kNearest);
  SiteModel model = matroid_site_model(instance);
  Neighborhoods nbhd = build_neighborhoods(instance, cons, model);

  const Rational lp_facility = detail::facility_term(instance, model, frac.y);
  Rational opt_double_prime = lp_facility, opt_prime = lp_facility;
  Rational step_one_excess;  // max over merged clients of cost' - 5 LP
  bool any_merged = false;
  for (int k = 0; k < nc; ++k) {
    if (!kept[k]) continue;
    opt_double_prime += instance.demand[k] * lp[k];
    const int j = cons.center_of[k];
    if (j == k) {
      opt_prime += instance.demand[k] * lp[k];
      continue;
    }
    // k sits at j: fill from the facilities nearest to j that k may use.
    Rational cost = 0, left = 1;
    for (int i : by_distance(instance, j, all_facilities, &pi[k])) {
      if (sgn(left) <= 0) break;
      const Rational take = std::min(frac.y[i], left);
      cost += take * *instance.distance(i, j);
      left -= take;
    }
    cost += pi[k] * left;
    opt_prime += instance.demand[k] * cost;
    const Rational excess = cost - 5 * lp[k];
    if (!any_merged || excess > step_one_excess) step_one_excess = excess;
    any_merged = true;
  }

  // y' truncates y greedily over each G_j, nearest first.
  std::vector<Rational> start(model.size());
  for (int j : cons.centers) {
    Rational used = 0;
    for (int i : by_distance(instance, j, nbhd.ball[j], nullptr)) {
      start[i] = std::min(frac.y[i], Rational(1 - used));
      used += start[i];
    }
  }

  std::vector<PenaltyTerm> terms(nc);
  LinearObjective t;
  t.coef.assign(model.size(), Rational(0));
  for (int i = 0; i < nf; ++i) t.coef[i] = instance.open_cost[i];
  for (int k = 0; k < nc; ++k) {
    if (!kept[k]) continue;
    const int j = cons.center_of[k];
    PenaltyTerm& term = terms[k];
    for (int i : nbhd.ball[j]) {
      if (*instance.distance(i, j) <= pi[k]) term.near.push_back(i);
    }
    term.far = 2 * pi[k];
    if (nbhd.gamma[j]) term.far = std::min(term.far, Rational(4 * *nbhd.gamma[j]));
    const Rational& d = instance.demand[k];
    t.constant += d * term.far;
    for (int i : term.near) t.coef[i] += d * (2 * *instance.distance(i, j) - term.far);
  }
  auto b_value = [&](int k, const std::vector<Rational>& v) {
    const Rational mass = detail::sum_over(v, terms[k].near);
    Rational served = 0;
    for (int i : terms[k].near) served += 2 * *instance.distance(i, cons.center_of[k]) * v[i];
    return instance.demand[k] * (served + terms[k].far * (1 - mass));
  };

  HalfSolution half = half_integralize(instance, cons, nbhd, model, start, t, mode, false);

  // Half penalties, then the demand left at each center.
  std::vector<bool> pays_half(nc, false);
  ConsolidatedInstance served = cons;
  served.demand.assign(nc, Rational(0));
  Rational half_penalties = 0, half_penalty_terms = 0;
  for (int k = 0; k < nc; ++k) {
    if (!kept[k]) continue;
    const int j = cons.center_of[k];
    const bool close = !nbhd.gamma[j] || pi[k] <= 2 * *nbhd.gamma[j];
    pays_half[k] = detail::sum_over(half.y, terms[k].near) == rat(1, 2) && close;
    if (pays_half[k]) {
      half_penalties += instance.demand[k] * pi[k];
      half_penalty_terms += b_value(k, half.y);
    } else {
      served.demand[j] += instance.demand[k];
    }
  }
  served.centers.clear();
  for (int j : cons.centers) {
    if (sgn(served.demand[j]) > 0) served.centers.push_back(j);
  }

  Clustering clustering = cluster_centers(instance, served, model, half, mode);
  IntegralSolution integral = integralize(instance, served, model, half, clustering, mode);

  RoundedSolution sol;
  sol.open = integral.open_sites;
  sol.assignment.assign(nc, std::nullopt);
  for (int k = 0; k < nc; ++k) {
    if (kept[k] && !pays_half[k]) sol.assignment[k] = integral.assigned[cons.center_of[k]];
  }
  price_solution(instance, sol);

  const Rational modified_cost = integral.cost() + half_penalties;
  CertificateTrail& cert = sol.certificate;
  cert.record("lp", frac.objective);
  cert.record("upfront_penalties", upfront);
  cert.record("opt_double_prime", opt_double_prime);
  cert.record("opt_prime", opt_prime);
  cert.record("t_start", half.t_start);
  cert.record("t_hat", half.t_value);
  cert.record("half_penalties", half_penalties);
  cert.record("h_start", integral.h_start);
  cert.record("h_tilde", integral.h_value);
  cert.record("modified_cost", modified_cost);
  cert.record("cost", sol.total());

  detail::check_consolidation(cert, cons);
  cert.check("upfront_penalties_le_2_lp", upfront, 2 * upfront_lp);
  cert.check("opt_double_prime_le_lp", opt_double_prime + upfront_lp, frac.objective);
  cert.check("step_one_cost_le_5_lp", any_merged ? step_one_excess : Rational(0), Rational(0));
  cert.check("opt_prime_le_5_opt_double_prime", opt_prime, 5 * opt_double_prime);
  cert.check("t_start_le_4_opt_prime", half.t_start, 4 * opt_prime);
  detail::check_half(cert, instance, cons, nbhd, model, half, mode);
  detail::check_integral(cert, integral);
  cert.check("half_penalties_le_their_terms", half_penalties, half_penalty_terms);
  cert.check("h_start_le_served_t_hat", integral.h_start, half.t_value - half_penalty_terms);
  cert.check("modified_cost_le_t_hat", modified_cost, half.t_value);
  cert.check("lift_extra_le_4_opt_double_prime", sol.total() - upfront - modified_cost,
             4 * opt_double_prime);
  detail::check_flag(cert, "open_set_feasible", solution_violations(instance, sol).empty());
  cert.check("cost_le_24_lp", sol.total(), 24 * frac.objective);
  return sol;
}

}  // namespace matmed
