// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/rounding.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <tuple>

#include "matmed/errors.hpp"
#include "rounding_detail.hpp"

namespace matmed {
namespace detail {

Rational finite_site_distance(const MedianInstance& instance, const SiteModel& model, int site,
                              int client) {
  const Distance& d = site_distance(instance, model, site, client);
  if (!d) {
    throw InternalError("no finite distance from facility " +
                        instance.facilities[model.origin[site]] + " to client " +
                        instance.clients[client]);
  }
  return *d;
}

Rational finite_between(const ConsolidatedInstance& cons, int j, int k) {
  const Distance& d = cons.between(j, k);
  if (!d) throw InternalError("clients without a common reachable facility");
  return *d;
}

FacilitySet sites_of(const SiteModel& model, const FacilitySet& facilities) {
  FacilitySet out;
  for (int s = 0; s < model.size(); ++s) {
    if (std::binary_search(facilities.begin(), facilities.end(), model.origin[s])) out.push_back(s);
  }
  return out;
}

void add_rank_rows(SiteModel& model, const MatroidSpec& m, int num_facilities) {
  for (int i : m.ground()) {
    FacilitySet sites = sites_of(model, {i});
    if (sites.empty()) continue;
    model.seed_rows.push_back(
        sum_row(sites, Sense::kLessEqual, Rational(rank(m, {i})), RowTag::kRankCut));
  }
  FacilitySet all = sites_of(model, m.ground());
  if (!all.empty()) {
    model.seed_rows.push_back(
        sum_row(all, Sense::kLessEqual, Rational(rank(m, m.ground())), RowTag::kRankCut));
  }
  // RankSeparator keeps a pointer to its matroid; keep both alive together.
  auto matroid = std::make_shared<MatroidSpec>(m);
  auto separator = std::make_shared<RankSeparator>(*matroid);
  std::vector<int> origin = model.origin;
  model.separators.push_back(
      [separator, matroid, origin, num_facilities](const std::vector<Rational>& v) -> std::optional<Row> {
        std::vector<Rational> y(num_facilities);
        for (size_t s = 0; s < origin.size(); ++s) y[origin[s]] += v[s];
        auto hit = (*separator)(y);
        if (!hit) return std::nullopt;
        FacilitySet sites;
        for (size_t s = 0; s < origin.size(); ++s) {
          if (std::binary_search(hit->set.begin(), hit->set.end(), origin[s])) {
            sites.push_back(static_cast<int>(s));
          }
        }
        return sum_row(sites, Sense::kLessEqual, Rational(hit->rank), RowTag::kRankCut);
      });
}

void add_count_rows(std::vector<Row>& rows, const FacilitySet& sites, int lower, int upper) {
  if (lower > 0) rows.push_back(sum_row(sites, Sense::kGreaterEqual, Rational(lower), RowTag::kBound));
  if (upper < static_cast<int>(sites.size())) {
    rows.push_back(sum_row(sites, Sense::kLessEqual, Rational(upper), RowTag::kBound));
  }
}

void add_bound_rows(SiteModel& model, const CardinalityBounds& bounds, const FacilitySet& f1,
                    const FacilitySet& f2) {
  FacilitySet all(model.size());
  std::iota(all.begin(), all.end(), 0);
  add_count_rows(model.seed_rows, sites_of(model, f1), bounds.lb1, bounds.ub1);
  add_count_rows(model.seed_rows, sites_of(model, f2), bounds.lb2, bounds.ub2);
  add_count_rows(model.seed_rows, all, bounds.lb, bounds.ub);
}

void check_flag(CertificateTrail& trail, const std::string& name, bool ok) {
  trail.check(name, Rational(ok ? 0 : 1), Rational(0));
}

Rational sum_over(const std::vector<Rational>& values, const FacilitySet& sites) {
  Rational total = 0;
  for (int s : sites) total += values[s];
  return total;
}

Rational facility_term(const MedianInstance& instance, const SiteModel& model,
                       const std::vector<Rational>& y) {
  Rational total = 0;
  for (int s = 0; s < model.size(); ++s) total += instance.open_cost[model.origin[s]] * y[s];
  return total;
}

Rational half_cost(const MedianInstance& instance, const ConsolidatedInstance& cons,
                   const SiteModel& model, const HalfSolution& half) {
  Rational total = facility_term(instance, model, half.y);
  for (int j : cons.centers) total += cons.demand[j] * half.chat[j];
  return total;
}

void check_consolidation(CertificateTrail& trail, const ConsolidatedInstance& cons) {
  bool separated = true;
  for (size_t a = 0; a < cons.centers.size(); ++a) {
    for (size_t b = a + 1; b < cons.centers.size(); ++b) {
      int j = cons.centers[a], k = cons.centers[b];
      const Distance& d = cons.between(j, k);
      if (d && *d < 4 * std::max(cons.radius[j], cons.radius[k])) separated = false;
    }
  }
  check_flag(trail, "centers_separated", separated);
}

void check_half(CertificateTrail& trail, const MedianInstance& instance,
                const ConsolidatedInstance& cons, const Neighborhoods& nbhd, const SiteModel& model,
                const HalfSolution& half, RoundingMode mode) {
  check_flag(trail, "half_vertex_extreme", half.extreme);
  check_flag(trail, "half_integral", denominators_within(half.y, {1, 2}));
  trail.check("t_hat_le_t_start", half.t_value, half.t_start);
  std::vector<int> primaries;
  bool sandwich = true;
  bool sigma_close = true;
  for (int j : cons.centers) {
    primaries.push_back(half.primary[j]);
    if (half.secondary[j] < 0) continue;
    Rational c1 = finite_site_distance(instance, model, half.primary[j], j);
    Rational c2 = finite_site_distance(instance, model, half.secondary[j], j);
    if (!(c1 <= half.chat[j] && half.chat[j] <= c2 && c2 <= 2 * half.chat[j])) sandwich = false;
    if (mode != RoundingMode::kBasic && half.sigma[j] != j && half.sigma[j] >= 0 && nbhd.gamma[j]) {
      if (finite_between(cons, j, half.sigma[j]) > 2 * *nbhd.gamma[j]) sigma_close = false;
    }
  }
  std::sort(primaries.begin(), primaries.end());
  check_flag(trail, "distinct_primaries",
             std::adjacent_find(primaries.begin(), primaries.end()) == primaries.end());
  check_flag(trail, "primary_chat_secondary_sandwich", sandwich);
  if (mode != RoundingMode::kBasic) check_flag(trail, "sigma_within_twice_gamma", sigma_close);
}

void check_integral(CertificateTrail& trail, const IntegralSolution& integral) {
  check_flag(trail, "integral_vertex", integral.integral);
  trail.check("h_tilde_le_h_start", integral.h_value, integral.h_start);
  trail.check("consolidated_cost_le_h_tilde", integral.cost(), integral.h_value);
}

}  // namespace detail

using detail::finite_between;
using detail::finite_site_distance;
using detail::site_distance;

const char* mode_name(RoundingMode mode) {
  switch (mode) {
    case RoundingMode::kBasic:
      return "basic";
    case RoundingMode::kImproved:
      return "improved";
    case RoundingMode::kLmp:
      return "lmp";
  }
  return "?";
}

RoundingMode parse_mode(const std::string& name) {
  if (name == "basic") return RoundingMode::kBasic;
  if (name == "improved") return RoundingMode::kImproved;
  if (name == "lmp") return RoundingMode::kLmp;
  throw InvalidArgument("unknown rounding mode \"" + name + "\"");
}

SiteModel matroid_site_model(const MedianInstance& instance) {
  SiteModel model;
  model.origin.resize(instance.num_facilities());
  std::iota(model.origin.begin(), model.origin.end(), 0);
  detail::add_rank_rows(model, instance.matroid, instance.num_facilities());
  return model;
}

ConsolidatedInstance consolidate(const MedianInstance& instance, const std::vector<Rational>& radius,
                                 const std::vector<bool>& active, MergeTarget target) {
  const int nc = instance.num_clients();
  ConsolidatedInstance cons;
  cons.center_of.assign(nc, -1);
  cons.demand.assign(nc, Rational(0));
  cons.radius = radius;
  cons.client_dist = client_distances(instance);
  std::vector<int> order;
  for (int j = 0; j < nc; ++j) {
    if (active[j]) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return radius[a] < radius[b]; });
  std::vector<int> centers;  // in creation order
  for (int j : order) {
    int best = -1;
    for (int k : centers) {
      const Distance& d = cons.between(j, k);
      if (!d || *d > 4 * std::max(radius[j], radius[k])) continue;
      if (target == MergeTarget::kFirst) {
        best = k;
        break;
      }
      if (best < 0 || *d < *cons.between(j, best) || (*d == *cons.between(j, best) && k < best)) {
        best = k;
      }
    }
    if (best < 0) {
      centers.push_back(j);
      cons.center_of[j] = j;
      cons.demand[j] = instance.demand[j];
    } else {
      cons.center_of[j] = best;
      cons.demand[best] += instance.demand[j];
    }
  }
  std::sort(centers.begin(), centers.end());
  cons.centers = std::move(centers);
  return cons;
}

ConsolidatedInstance consolidate_demands(const MedianInstance& instance,
                                         const FractionalSolution& frac) {
  std::vector<bool> active(instance.num_clients());
  for (int j = 0; j < instance.num_clients(); ++j) active[j] = sgn(instance.demand[j]) > 0;
  ConsolidatedInstance cons = consolidate(instance, frac.cbar, active, MergeTarget::kNearest);
  Rational opt = 0;
  for (int i = 0; i < instance.num_facilities(); ++i) opt += instance.open_cost[i] * frac.y[i];
  for (int j : cons.centers) opt += cons.demand[j] * frac.cbar[j];
  cons.opt_prime = opt;
  return cons;
}

Neighborhoods build_neighborhoods(const MedianInstance& instance, const ConsolidatedInstance& cons,
                                  const SiteModel& model) {
  const int nc = instance.num_clients();
  Neighborhoods nb;
  nb.owner.assign(model.size(), -1);
  nb.cluster.assign(nc, {});
  nb.inner.assign(nc, {});
  nb.ball.assign(nc, {});
  nb.gamma.assign(nc, std::nullopt);
  for (int s = 0; s < model.size(); ++s) {
    Distance best;
    for (int j : cons.centers) {
      const Distance& d = site_distance(instance, model, s, j);
      if (d && (!best || *d < *best)) {
        best = d;
        nb.owner[s] = j;
      }
    }
    if (nb.owner[s] >= 0) nb.cluster[nb.owner[s]].push_back(s);
  }
  for (int j : cons.centers) {
    for (int s = 0; s < model.size(); ++s) {
      if (nb.owner[s] == j) continue;
      const Distance& d = site_distance(instance, model, s, j);
      if (d && (!nb.gamma[j] || *d < *nb.gamma[j])) nb.gamma[j] = d;
    }
    for (int s : nb.cluster[j]) {
      const Rational c = *site_distance(instance, model, s, j);
      if (c <= 2 * cons.radius[j]) nb.inner[j].push_back(s);
      if (!nb.gamma[j] || c <= *nb.gamma[j]) nb.ball[j].push_back(s);
    }
  }
  return nb;
}

TWeights t_weights(RoundingMode mode) {
  switch (mode) {
    case RoundingMode::kBasic:
      return {1, 1, 3};
    case RoundingMode::kImproved:
      return {1, 2, 4};
    case RoundingMode::kLmp:
      return {8, 2, 4};
  }
  return {};
}

LinearObjective t_objective(const MedianInstance& instance, const ConsolidatedInstance& cons,
                            const Neighborhoods& nbhd, const SiteModel& model,
                            const TWeights& weights) {
  LinearObjective t;
  t.coef.assign(model.size(), Rational(0));
  for (int s = 0; s < model.size(); ++s) t.coef[s] = weights.facility * instance.open_cost[model.origin[s]];
  for (int j : cons.centers) {
    const Rational& d = cons.demand[j];
    for (int s : nbhd.ball[j]) t.coef[s] += d * weights.near * *site_distance(instance, model, s, j);
    if (nbhd.gamma[j]) {
      const Rational far = d * weights.far * *nbhd.gamma[j];
      t.constant += far;
      for (int s : nbhd.ball[j]) t.coef[s] -= far;
    }
  }
  return t;
}

LinearSystem half_polytope(const ConsolidatedInstance& cons, const Neighborhoods& nbhd,
                           const SiteModel& model, bool hard_unbounded) {
  LinearSystem system(model.size());
  for (const Row& row : model.seed_rows) system.add_row(row);
  for (int j : cons.centers) {
    system.add_row(sum_row(nbhd.inner[j], Sense::kGreaterEqual, rat(1, 2), RowTag::kFacilityLower));
    Sense sense = (hard_unbounded && !nbhd.gamma[j]) ? Sense::kEqual : Sense::kLessEqual;
    system.add_row(sum_row(nbhd.ball[j], sense, Rational(1), RowTag::kNeighborhood));
  }
  return system;
}

FacilitySet HalfSolution::support(int client) const {
  FacilitySet s{primary[client]};
  if (secondary[client] >= 0 && secondary[client] != primary[client]) s.push_back(secondary[client]);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Rational> neighborhood_start(const ConsolidatedInstance& cons, const Neighborhoods& nbhd,
                                         const SiteModel& model, const FractionalSolution& frac) {
  std::vector<Rational> start(model.size());
  for (int j : cons.centers) {
    for (int s : nbhd.ball[j]) start[s] = frac.x_at(model.origin[s], j);
  }
  return start;
}

namespace {

// Nearest site to `client` among `candidates` with positive value, lowest
// index on ties; -1 if none.
int nearest_positive(const MedianInstance& instance, const SiteModel& model,
                     const std::vector<Rational>& y, const FacilitySet& candidates, int client,
                     int skip = -1) {
  int best = -1;
  Rational best_d;
  for (int s : candidates) {
    if (s == skip || sgn(y[s]) <= 0) continue;
    const Distance& d = site_distance(instance, model, s, client);
    if (!d) continue;
    if (best < 0 || *d < best_d) {
      best = s;
      best_d = *d;
    }
  }
  return best;
}

}  // namespace

void assign_half_facilities(const MedianInstance& instance, const ConsolidatedInstance& cons,
                            const Neighborhoods& nbhd, const SiteModel& model, RoundingMode mode,
                            HalfSolution& half) {
  const int nc = instance.num_clients();
  half.primary.assign(nc, -1);
  half.secondary.assign(nc, -1);
  half.sigma.assign(nc, -1);
  half.chat.assign(nc, Rational(0));
  for (int j : cons.centers) {
    half.primary[j] = nearest_positive(instance, model, half.y, nbhd.inner[j], j);
    if (half.primary[j] < 0) throw InternalError("center without an open site in F'_j");
    if (detail::sum_over(half.y, nbhd.ball[j]) == 1) {
      half.sigma[j] = j;
      continue;
    }
    for (int k : cons.centers) {
      if (k == j || !cons.between(j, k)) continue;
      if (half.sigma[j] < 0 || *cons.between(j, k) < *cons.between(j, half.sigma[j])) half.sigma[j] = k;
    }
  }
  FacilitySet all_sites(model.size());
  std::iota(all_sites.begin(), all_sites.end(), 0);
  for (int j : cons.centers) {
    const int p = half.primary[j];
    int& second = half.secondary[j];
    if (half.y[p] >= 1) {
      second = p;
    } else if (mode == RoundingMode::kBasic) {
      second = nearest_positive(instance, model, half.y, all_sites, j, p);
    } else if (half.sigma[j] == j) {
      second = nearest_positive(instance, model, half.y, nbhd.ball[j], j, p);
    } else if (half.sigma[j] >= 0) {
      second = half.primary[half.sigma[j]];
    }
    const Rational c1 = finite_site_distance(instance, model, p, j);
    if (second == p) {
      half.chat[j] = c1;
    } else if (second >= 0) {
      half.chat[j] = (c1 + finite_site_distance(instance, model, second, j)) / 2;
    }
  }
}

HalfSolution half_integralize(const MedianInstance& instance, const ConsolidatedInstance& cons,
                              const Neighborhoods& nbhd, const SiteModel& model,
                              std::vector<Rational> start, const LinearObjective& objective,
                              RoundingMode mode, bool hard_unbounded) {
  LinearSystem system = half_polytope(cons, nbhd, model, hard_unbounded);
  HalfSolution half;
  half.t_start = objective(start);
  VertexPoint vertex;
  try {
    vertex = crash_to_extreme(system, start, objective, model.separators, &half.crash);
  } catch (const InvalidArgument& e) {
    throw InternalError(std::string("half polytope start point: ") + e.what());
  }
  half.start = std::move(start);
  half.y = std::move(vertex.values);
  half.extreme = vertex.extreme();
  half.t_value = objective(half.y);
  assign_half_facilities(instance, cons, nbhd, model, mode, half);
  return half;
}

HalfSolution half_integralize(const MedianInstance& instance, const ConsolidatedInstance& cons,
                              const Neighborhoods& nbhd, const FractionalSolution& frac,
                              RoundingMode mode) {
  SiteModel model = matroid_site_model(instance);
  return half_integralize(instance, cons, nbhd, model, neighborhood_start(cons, nbhd, model, frac),
                          t_objective(instance, cons, nbhd, model, t_weights(mode)), mode);
}

Rational clustering_key(const MedianInstance& instance, const ConsolidatedInstance& cons,
                        const SiteModel& model, const HalfSolution& half, int client) {
  const int sigma = half.sigma[client];
  if (sigma == client) return half.chat[client];
  return (finite_site_distance(instance, model, half.primary[client], client) +
          finite_between(cons, client, sigma) +
          finite_site_distance(instance, model, half.secondary[client], sigma)) /
         2;
}

Clustering cluster_centers(const MedianInstance& instance, const ConsolidatedInstance& cons,
                           const SiteModel& model, const HalfSolution& half, RoundingMode mode) {
  Clustering out;
  out.ctr.assign(instance.num_clients(), -1);
  out.key.assign(instance.num_clients(), Rational(0));
  std::vector<int> remaining = cons.centers;
  for (int j : remaining) {
    out.key[j] = mode == RoundingMode::kBasic ? half.chat[j]
                                              : clustering_key(instance, cons, model, half, j);
  }
  auto rank_key = [&](int j) {
    bool routed = mode != RoundingMode::kBasic && half.sigma[j] != j;
    return std::make_tuple(out.key[j], routed, j);
  };
  while (!remaining.empty()) {
    int pick = *std::min_element(remaining.begin(), remaining.end(),
                                 [&](int a, int b) { return rank_key(a) < rank_key(b); });
    out.centers.push_back(pick);
    FacilitySet sp = half.support(pick);
    std::vector<int> rest;
    for (int k : remaining) {
      FacilitySet sk = half.support(k);
      bool meets = std::find_first_of(sk.begin(), sk.end(), sp.begin(), sp.end()) != sk.end();
      if (k == pick || meets) {
        out.ctr[k] = pick;
      } else {
        rest.push_back(k);
      }
    }
    remaining = std::move(rest);
  }
  return out;
}

LinearObjective h_objective(const MedianInstance& instance, const ConsolidatedInstance& cons,
                            const SiteModel& model, const HalfSolution& half,
                            const Clustering& clustering, RoundingMode mode) {
  LinearObjective h;
  h.coef.assign(model.size(), Rational(0));
  const Rational facility_weight = mode == RoundingMode::kLmp ? 8 : 1;
  for (int s = 0; s < model.size(); ++s) h.coef[s] = facility_weight * instance.open_cost[model.origin[s]];
  for (int k : cons.centers) {
    const Rational& d = cons.demand[k];
    const int j = clustering.ctr[k];
    const FacilitySet sj = half.support(j);
    const int p = half.primary[k];
    const bool inside = std::binary_search(sj.begin(), sj.end(), p);
    if (inside || mode == RoundingMode::kBasic) {
      for (int s : sj) h.coef[s] += d * finite_site_distance(instance, model, s, k);
      if (!inside) {
        h.coef[p] += d * (finite_site_distance(instance, model, p, k) -
                          finite_site_distance(instance, model, half.secondary[k], k));
      }
      continue;
    }
    const int sigma = half.sigma[k];
    const Rational hop = finite_between(cons, k, sigma);
    for (int s : sj) h.coef[s] += d * (hop + finite_site_distance(instance, model, s, sigma));
    h.coef[p] += d * (finite_site_distance(instance, model, p, k) - hop -
                      finite_site_distance(instance, model, half.primary[sigma], sigma));
  }
  return h;
}

LinearSystem cluster_polytope(const SiteModel& model, const HalfSolution& half,
                              const Clustering& clustering) {
  LinearSystem system(model.size());
  for (const Row& row : model.seed_rows) system.add_row(row);
  for (int j : clustering.centers) {
    system.add_row(sum_row(half.support(j), Sense::kEqual, Rational(1), RowTag::kCluster));
  }
  return system;
}

IntegralSolution integralize(const MedianInstance& instance, const ConsolidatedInstance& cons,
                             const SiteModel& model, const HalfSolution& half,
                             const Clustering& clustering, RoundingMode mode) {
  IntegralSolution out;
  out.start = half.y;
  for (int j : clustering.centers) {
    FacilitySet sj = half.support(j);
    for (int s : sj) out.start[s] = sj.size() == 1 ? Rational(1) : rat(1, 2);
  }
  LinearObjective h = h_objective(instance, cons, model, half, clustering, mode);
  LinearSystem system = cluster_polytope(model, half, clustering);
  VertexPoint vertex;
  try {
    vertex = crash_to_extreme(system, out.start, h, model.separators, &out.crash);
  } catch (const InvalidArgument& e) {
    throw InternalError(std::string("cluster polytope start point: ") + e.what());
  }
  out.y = std::move(vertex.values);
  out.integral = vertex.extreme() && denominators_within(out.y, {1});
  out.h_start = h(out.start);
  out.h_value = h(out.y);
  for (int s = 0; s < model.size(); ++s) {
    if (out.y[s] == 1) out.open_sites.push_back(s);
  }
  out.assigned.assign(instance.num_clients(), -1);
  for (int j : clustering.centers) {
    for (int s : half.support(j)) {
      if (out.y[s] == 1) out.assigned[j] = s;
    }
    if (out.assigned[j] < 0) throw InternalError("cluster without an open site");
  }
  for (int k : cons.centers) {
    if (clustering.ctr[k] == k) continue;
    const int p = half.primary[k];
    out.assigned[k] = out.y[p] == 1 ? p : out.assigned[clustering.ctr[k]];
  }
  out.facility_cost = detail::facility_term(instance, model, out.y);
  for (int k : cons.centers) {
    out.connection_cost += cons.demand[k] * finite_site_distance(instance, model, out.assigned[k], k);
  }
  return out;
}

RoundedSolution lift_to_clients(const MedianInstance& instance, const ConsolidatedInstance& cons,
                                const SiteModel& model, const IntegralSolution& integral) {
  RoundedSolution sol;
  for (int s : integral.open_sites) sol.open.push_back(model.origin[s]);
  sol.open = make_set(sol.open);
  sol.assignment.assign(instance.num_clients(), std::nullopt);
  for (int j = 0; j < instance.num_clients(); ++j) {
    const int c = cons.center_of[j];
    if (c >= 0 && integral.assigned[c] >= 0) sol.assignment[j] = model.origin[integral.assigned[c]];
  }
  price_solution(instance, sol);
  return sol;
}

RoundedSolution round_matroid_median(const MedianInstance& instance, RoundingMode mode) {
  if (!std::holds_alternative<PlainVariant>(instance.variant)) {
    throw InvalidArgument("round_matroid_median needs a plain instance, got " +
                          variant_name(instance.variant));
  }
  return round_matroid_median(instance, solve_relaxation(instance), mode);
}

RoundedSolution round_matroid_median(const MedianInstance& instance, const FractionalSolution& frac,
                                     RoundingMode mode) {
  if (!std::holds_alternative<PlainVariant>(instance.variant)) {
    throw InvalidArgument("round_matroid_median needs a plain instance, got " +
                          variant_name(instance.variant));
  }
  ConsolidatedInstance cons = consolidate_demands(instance, frac);
  SiteModel model = matroid_site_model(instance);
  Neighborhoods nbhd = build_neighborhoods(instance, cons, model);
  const TWeights weights = t_weights(mode);
  HalfSolution half =
      half_integralize(instance, cons, nbhd, model, neighborhood_start(cons, nbhd, model, frac),
                       t_objective(instance, cons, nbhd, model, weights), mode);
  Clustering clustering = cluster_centers(instance, cons, model, half, mode);
  IntegralSolution integral = integralize(instance, cons, model, half, clustering, mode);
  RoundedSolution sol = lift_to_clients(instance, cons, model, integral);

  CertificateTrail& cert = sol.certificate;
  Rational lp_facility = 0;
  for (int i = 0; i < instance.num_facilities(); ++i) lp_facility += instance.open_cost[i] * frac.y[i];
  Rational center_connection = 0;
  for (int j : cons.centers) center_connection += cons.demand[j] * frac.cbar[j];
  Rational merged_bound = 0;
  for (int j = 0; j < instance.num_clients(); ++j) {
    if (cons.center_of[j] >= 0 && !cons.is_center(j)) merged_bound += 4 * instance.demand[j] * frac.cbar[j];
  }
  const Rational hcost = detail::half_cost(instance, cons, model, half);
  cert.record("lp", frac.objective);
  cert.record("opt_prime", cons.opt_prime);
  cert.record("t_start", half.t_start);
  cert.record("t_hat", half.t_value);
  cert.record("half_cost", hcost);
  cert.record("h_start", integral.h_start);
  cert.record("h_tilde", integral.h_value);
  cert.record("consolidated_cost", integral.cost());
  cert.record("cost", sol.total());

  detail::check_consolidation(cert, cons);
  Rational inner_mass = 1;
  for (int j : cons.centers) {
    Rational m = 0;
    for (int s : nbhd.inner[j]) m += frac.x_at(model.origin[s], j);
    inner_mass = std::min(inner_mass, m);
  }
  cert.check("inner_mass_at_least_half", rat(1, 2), inner_mass);
  cert.check("opt_prime_le_lp", cons.opt_prime, frac.objective);
  detail::check_half(cert, instance, cons, nbhd, model, half, mode);
  detail::check_integral(cert, integral);
  cert.check("lift_extra_le_merged_bound", sol.total() - integral.cost(), merged_bound);
  detail::check_flag(cert, "open_set_feasible", solution_violations(instance, sol).empty());
  switch (mode) {
    case RoundingMode::kBasic:
      cert.check("t_start_le_3_opt_prime", half.t_start, 3 * cons.opt_prime);
      cert.check("half_cost_le_t_hat", hcost, half.t_value);
      cert.check("h_start_le_2_half_cost", integral.h_start, 2 * hcost);
      cert.check("cost_le_10_lp", sol.total(), 10 * frac.objective);
      break;
    case RoundingMode::kImproved:
      cert.check("t_start_le_4_opt_prime", half.t_start, 4 * cons.opt_prime);
      cert.check("h_start_le_t_hat", integral.h_start, half.t_value);
      cert.check("cost_le_8_lp", sol.total(), 8 * frac.objective);
      break;
    case RoundingMode::kLmp: {
      cert.check("t_start_le_lmp_bound", half.t_start, 8 * lp_facility + 4 * center_connection);
      cert.check("h_start_le_t_hat", integral.h_start, half.t_value);
      cert.check("lmp_consolidated_le_h_tilde", 8 * integral.facility_cost + integral.connection_cost,
                 integral.h_value);
      cert.check("lmp_8f_plus_c_le_8_lp", 8 * sol.facility_cost + sol.connection_cost,
                 8 * frac.objective);
      cert.check("cost_le_8_lp", sol.total(), 8 * frac.objective);
      break;
    }
  }
  return sol;
}

}  // namespace matmed
