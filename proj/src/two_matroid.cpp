// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "matmed/errors.hpp"
#include "matmed/extensions.hpp"
#include "rounding_detail.hpp"

namespace matmed {

FacilitySet CloneMap::lift(const FacilitySet& facilities) const {
  FacilitySet out;
  for (int i : facilities) out.insert(out.end(), sites[i].begin(), sites[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

FacilitySet CloneMap::project(const FacilitySet& site_set) const {
  FacilitySet out;
  for (int s : site_set) out.push_back(origin[s]);
  return make_set(out);
}

ClonedSolution clone_facilities(const MedianInstance& instance, const ConsolidatedInstance& cons,
                                const Neighborhoods& nbhd, const FractionalSolution& frac) {
  const int nf = instance.num_facilities();
  const int nc = instance.num_clients();
  // split_for[i] = the center whose clone i gets, or -1.
  std::vector<int> split_for(nf, -1);
  for (int j : cons.centers) {
    for (int i : nbhd.ball[j]) {
      const Rational& xij = frac.x_at(i, j);
      if (sgn(xij) > 0 && xij < frac.y[i]) split_for[i] = j;
    }
  }
  ClonedSolution out;
  out.num_clients = nc;
  out.map.sites.assign(nf, {});
  for (int i = 0; i < nf; ++i) {
    const int copies = split_for[i] >= 0 ? 2 : 1;
    for (int c = 0; c < copies; ++c) {
      out.map.sites[i].push_back(out.map.num_sites());
      out.map.origin.push_back(i);
    }
  }
  out.y.assign(out.map.num_sites(), Rational(0));
  out.x.assign(static_cast<size_t>(out.map.num_sites()) * nc, Rational(0));
  auto x_ref = [&](int s, int k) -> Rational& { return out.x[static_cast<size_t>(s) * nc + k]; };
  for (int i = 0; i < nf; ++i) {
    const int j = split_for[i];
    if (j < 0) {
      const int s = out.map.sites[i][0];
      out.y[s] = frac.y[i];
      for (int k = 0; k < nc; ++k) x_ref(s, k) = frac.x_at(i, k);
      continue;
    }
    const int own = out.map.sites[i][0], rest = out.map.sites[i][1];
    out.y[own] = frac.x_at(i, j);
    out.y[rest] = frac.y[i] - out.y[own];
    for (int k = 0; k < nc; ++k) {
      const Rational& xik = frac.x_at(i, k);
      if (k == j) {
        x_ref(own, k) = xik;
      } else {
        x_ref(own, k) = xik * out.y[own] / frac.y[i];
        x_ref(rest, k) = xik - x_ref(own, k);
      }
    }
  }
  out.ball.assign(nc, {});
  for (int j : cons.centers) {
    for (int i : nbhd.ball[j]) {
      if (split_for[i] == j) {
        out.ball[j].push_back(out.map.sites[i][0]);
      } else if (sgn(frac.y[i]) > 0 && frac.x_at(i, j) == frac.y[i]) {
        out.ball[j].push_back(out.map.sites[i][0]);
      }
    }
    std::sort(out.ball[j].begin(), out.ball[j].end());
  }
  return out;
}

SiteModel split_site_model(const MedianInstance& instance, const CloneMap& map) {
  SiteModel model;
  model.origin = map.origin;
  const int nf = instance.num_facilities();
  detail::add_rank_rows(model, instance.matroid, nf);
  if (const auto* two = std::get_if<TwoMatroidVariant>(&instance.variant)) {
    detail::add_rank_rows(model, two->matroid2, nf);
    detail::add_bound_rows(model, two->bounds, two->f1, two->f2);
  } else if (const auto* lam = std::get_if<LaminarVariant>(&instance.variant)) {
    for (const LaminarBound& set : lam->family) {
      detail::add_count_rows(model.seed_rows, detail::sites_of(model, set.members), set.lower,
                             set.upper);
    }
    detail::add_bound_rows(model, lam->bounds, lam->f1, lam->f2);
  }
  return model;
}

namespace {

void require_split(const MedianInstance& instance, bool laminar) {
  const bool ok = laminar ? std::holds_alternative<LaminarVariant>(instance.variant)
                          : std::holds_alternative<TwoMatroidVariant>(instance.variant);
  if (!ok) {
    throw InvalidArgument(std::string(laminar ? "round_laminar_constrained" : "round_two_matroid") +
                          " got a " + variant_name(instance.variant) + " instance");
  }
}

}  // namespace

RoundedSolution round_two_matroid(const MedianInstance& instance) {
  require_split(instance, false);
  return round_split(instance, solve_relaxation(instance));
}

RoundedSolution round_laminar_constrained(const MedianInstance& instance) {
  require_split(instance, true);
  return round_split(instance, solve_relaxation(instance));
}

RoundedSolution round_split(const MedianInstance& instance, const FractionalSolution& frac) {
  if (!std::holds_alternative<TwoMatroidVariant>(instance.variant) &&
      !std::holds_alternative<LaminarVariant>(instance.variant)) {
    throw InvalidArgument("round_split got a " + variant_name(instance.variant) + " instance");
  }
  const RoundingMode mode = RoundingMode::kImproved;
  ConsolidatedInstance cons = consolidate_demands(instance, frac);
  Neighborhoods plain_nbhd = build_neighborhoods(instance, cons, matroid_site_model(instance));
  ClonedSolution cloned = clone_facilities(instance, cons, plain_nbhd, frac);
  SiteModel model = split_site_model(instance, cloned.map);

  // F'_j is kept inside G'_j so the neighborhood rows stay nested.
  Neighborhoods nbhd = build_neighborhoods(instance, cons, model);
  for (int j : cons.centers) {
    nbhd.ball[j] = cloned.ball[j];
    FacilitySet inner;
    std::set_intersection(nbhd.inner[j].begin(), nbhd.inner[j].end(), cloned.ball[j].begin(),
                          cloned.ball[j].end(), std::back_inserter(inner));
    nbhd.inner[j] = std::move(inner);
  }

  HalfSolution half = half_integralize(instance, cons, nbhd, model, cloned.y,
                                       t_objective(instance, cons, nbhd, model, t_weights(mode)), mode);
  Clustering clustering = cluster_centers(instance, cons, model, half, mode);
  IntegralSolution integral = integralize(instance, cons, model, half, clustering, mode);
  RoundedSolution sol = lift_to_clients(instance, cons, model, integral);

  CertificateTrail& cert = sol.certificate;
  Rational merged_bound = 0;
  for (int j = 0; j < instance.num_clients(); ++j) {
    if (cons.center_of[j] >= 0 && !cons.is_center(j)) merged_bound += 4 * instance.demand[j] * frac.cbar[j];
  }
  Rational inner_mass = 1;
  for (int j : cons.centers) inner_mass = std::min(inner_mass, detail::sum_over(cloned.y, nbhd.inner[j]));
  cert.record("lp", frac.objective);
  cert.record("opt_prime", cons.opt_prime);
  cert.record("sites", Rational(model.size()));
  cert.record("t_start", half.t_start);
  cert.record("t_hat", half.t_value);
  cert.record("h_start", integral.h_start);
  cert.record("h_tilde", integral.h_value);
  cert.record("consolidated_cost", integral.cost());
  cert.record("cost", sol.total());

  detail::check_consolidation(cert, cons);
  cert.check("inner_mass_at_least_half", rat(1, 2), inner_mass);
  cert.check("opt_prime_le_lp", cons.opt_prime, frac.objective);
  detail::check_half(cert, instance, cons, nbhd, model, half, mode);
  detail::check_integral(cert, integral);
  cert.check("t_start_le_4_opt_prime", half.t_start, 4 * cons.opt_prime);
  cert.check("h_start_le_t_hat", integral.h_start, half.t_value);
  cert.check("lift_extra_le_merged_bound", sol.total() - integral.cost(), merged_bound);
  detail::check_flag(cert, "open_set_feasible", solution_violations(instance, sol).empty());
  cert.check("cost_le_8_lp", sol.total(), 8 * frac.objective);
  return sol;
}

}  // namespace matmed
