// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/instance.hpp"

#include <algorithm>

#include "matmed/errors.hpp"

namespace matmed {

std::string variant_name(const VariantPayload& v) {
  static const char* const kNames[] = {"plain",   "penalty",  "two_matroid",
                                       "laminar", "knapsack", "intersection"};
  return kNames[v.index()];
}

int MedianInstance::facility_index(const std::string& id) const {
  auto it = std::find(facilities.begin(), facilities.end(), id);
  if (it == facilities.end()) throw InvalidArgument("unknown facility id \"" + id + "\"");
  return static_cast<int>(it - facilities.begin());
}

int MedianInstance::client_index(const std::string& id) const {
  auto it = std::find(clients.begin(), clients.end(), id);
  if (it == clients.end()) throw InvalidArgument("unknown client id \"" + id + "\"");
  return static_cast<int>(it - clients.begin());
}

std::vector<Distance> client_distances(const MedianInstance& instance) {
  const int nc = instance.num_clients();
  std::vector<Distance> out(static_cast<size_t>(nc) * nc);
  for (int j = 0; j < nc; ++j) {
    out[static_cast<size_t>(j) * nc + j] = Rational(0);
    for (int k = j + 1; k < nc; ++k) {
      Distance best;
      for (int i = 0; i < instance.num_facilities(); ++i) {
        const Distance& a = instance.distance(i, j);
        const Distance& b = instance.distance(i, k);
        if (!a || !b) continue;
        Rational via = *a + *b;
        if (!best || via < *best) best = via;
      }
      out[static_cast<size_t>(j) * nc + k] = best;
      out[static_cast<size_t>(k) * nc + j] = best;
    }
  }
  return out;
}

void CertificateTrail::record(const std::string& name, const Rational& value) {
  for (auto& [key, v] : values) {
    if (key == name) {
      v = value;
      return;
    }
  }
  values.emplace_back(name, value);
}

void CertificateTrail::check(const std::string& name, const Rational& lhs, const Rational& rhs) {
  checks.push_back({name, lhs, rhs});
}

bool CertificateTrail::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
}

const Rational* CertificateTrail::value(const std::string& name) const {
  for (const auto& [key, v] : values) {
    if (key == name) return &v;
  }
  return nullptr;
}

const CertificateCheck* CertificateTrail::find_check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> CertificateTrail::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.holds()) out.push_back(c.name + ": " + to_string(c.lhs) + " > " + to_string(c.rhs));
  }
  return out;
}

void price_solution(const MedianInstance& instance, RoundedSolution& sol) {
  sol.facility_cost = 0;
  sol.connection_cost = 0;
  sol.penalty_cost = 0;
  for (int i : sol.open) sol.facility_cost += instance.open_cost[i];
  const auto* penalty = std::get_if<PenaltyVariant>(&instance.variant);
  for (int j = 0; j < instance.num_clients(); ++j) {
    const auto& a = j < static_cast<int>(sol.assignment.size()) ? sol.assignment[j] : std::nullopt;
    if (a) {
      const Distance& d = instance.distance(*a, j);
      if (d) sol.connection_cost += instance.demand[j] * *d;
    } else if (penalty) {
      sol.penalty_cost += instance.demand[j] * penalty->penalty[j];
    }
  }
}

namespace {

int count_in(const FacilitySet& open, const FacilitySet& part) {
  int n = 0;
  for (int i : open) n += std::binary_search(part.begin(), part.end(), i) ? 1 : 0;
  return n;
}

FacilitySet intersect(const FacilitySet& a, const FacilitySet& b) {
  FacilitySet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_bounds(const CardinalityBounds& b, const FacilitySet& open, const FacilitySet& f1,
                  const FacilitySet& f2, std::vector<std::string>& out) {
  auto within = [&](const char* name, int value, int lo, int hi) {
    if (value < lo || value > hi) {
      out.push_back(std::string(name) + " count " + std::to_string(value) + " outside [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  };
  within("F1", count_in(open, f1), b.lb1, b.ub1);
  within("F2", count_in(open, f2), b.lb2, b.ub2);
  within("total", static_cast<int>(open.size()), b.lb, b.ub);
}

}  // namespace

std::vector<std::string> open_set_violations(const MedianInstance& instance, const FacilitySet& open) {
  std::vector<std::string> out;
  for (int i : open) {
    if (i < 0 || i >= instance.num_facilities()) {
      out.push_back("open facility index " + std::to_string(i) + " out of range");
      return out;
    }
  }
  if (!std::is_sorted(open.begin(), open.end()) ||
      std::adjacent_find(open.begin(), open.end()) != open.end()) {
    out.push_back("open set is not a sorted set");
    return out;
  }
  if (!is_independent(instance.matroid, intersect(open, instance.matroid.ground()))) {
    out.push_back("open set is dependent in the matroid");
  }
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TwoMatroidVariant>) {
          if (!is_independent(v.matroid2, intersect(open, v.f2))) {
            out.push_back("open F2 facilities are dependent in the second matroid");
          }
          check_bounds(v.bounds, open, v.f1, v.f2, out);
        } else if constexpr (std::is_same_v<T, LaminarVariant>) {
          for (size_t s = 0; s < v.family.size(); ++s) {
            int n = count_in(open, v.family[s].members);
            if (n < v.family[s].lower || n > v.family[s].upper) {
              out.push_back("laminar set " + std::to_string(s) + " holds " + std::to_string(n) +
                            " open facilities");
            }
          }
          check_bounds(v.bounds, open, v.f1, v.f2, out);
        } else if constexpr (std::is_same_v<T, KnapsackVariant>) {
          Rational w = 0;
          for (int i : open) w += v.weight[i];
          if (w > v.budget) out.push_back("open weight " + to_string(w) + " exceeds budget");
        } else if constexpr (std::is_same_v<T, IntersectionVariant>) {
          if (!is_independent(v.matroid2, intersect(open, v.matroid2.ground()))) {
            out.push_back("open set is dependent in the second matroid");
          }
        }
      },
      instance.variant);
  return out;
}

std::vector<std::string> solution_violations(const MedianInstance& instance,
                                             const RoundedSolution& sol) {
  std::vector<std::string> out = open_set_violations(instance, sol.open);
  if (static_cast<int>(sol.assignment.size()) != instance.num_clients()) {
    out.push_back("assignment does not cover every client");
    return out;
  }
  const bool penalties = std::holds_alternative<PenaltyVariant>(instance.variant);
  for (int j = 0; j < instance.num_clients(); ++j) {
    const auto& a = sol.assignment[j];
    if (!a) {
      if (!penalties && sgn(instance.demand[j]) > 0) {
        out.push_back("client " + instance.clients[j] + " is unassigned");
      }
      continue;
    }
    if (!std::binary_search(sol.open.begin(), sol.open.end(), *a)) {
      out.push_back("client " + instance.clients[j] + " uses a closed facility");
    } else if (!instance.distance(*a, j)) {
      out.push_back("client " + instance.clients[j] + " uses a forbidden facility");
    }
  }
  return out;
}

void assign_nearest(const MedianInstance& instance, RoundedSolution& sol) {
  const auto* penalty = std::get_if<PenaltyVariant>(&instance.variant);
  sol.assignment.assign(instance.num_clients(), std::nullopt);
  for (int j = 0; j < instance.num_clients(); ++j) {
    std::optional<int> best;
    for (int i : sol.open) {
      const Distance& d = instance.distance(i, j);
      if (d && (!best || *d < *instance.distance(*best, j))) best = i;
    }
    if (best && penalty && penalty->penalty[j] < *instance.distance(*best, j)) best.reset();
    sol.assignment[j] = best;
  }
  price_solution(instance, sol);
}

}  // namespace matmed
