// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <set>

#include "matmed/instance.hpp"

namespace matmed {
namespace {

void check_unique(const std::vector<std::string>& ids, const char* what,
                  std::vector<std::string>& out) {
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) out.push_back(std::string("duplicate ") + what + " id \"" + id + "\"");
  }
}

void check_split(const MedianInstance& inst, const FacilitySet& f1, const FacilitySet& f2,
                 const CardinalityBounds& b, std::vector<std::string>& out) {
  FacilitySet all = f1;
  all.insert(all.end(), f2.begin(), f2.end());
  std::sort(all.begin(), all.end());
  FacilitySet everyone(inst.num_facilities());
  for (int i = 0; i < inst.num_facilities(); ++i) everyone[i] = i;
  if (all != everyone) out.push_back("F1 and F2 do not partition the facilities");
  for (int i : f2) {
    if (i < 0 || i >= inst.num_facilities()) continue;
    for (int j = 0; j < inst.num_clients(); ++j) {
      if (inst.distance(i, j)) {
        out.push_back("client " + inst.clients[j] + " has a finite distance to F2 facility " +
                      inst.facilities[i]);
      }
    }
  }
  auto pair = [&](const char* name, int lo, int hi) {
    if (lo < 0 || lo > hi) out.push_back(std::string("bounds ") + name + " are not 0 <= lb <= ub");
  };
  pair("F1", b.lb1, b.ub1);
  pair("F2", b.lb2, b.ub2);
  pair("total", b.lb, b.ub);
}

}  // namespace

std::vector<std::string> validate(const MedianInstance& inst) {
  std::vector<std::string> out;
  const int nf = inst.num_facilities();
  const int nc = inst.num_clients();
  check_unique(inst.facilities, "facility", out);
  check_unique(inst.clients, "client", out);
  if (static_cast<int>(inst.demand.size()) != nc) out.push_back("demand list size mismatch");
  if (static_cast<int>(inst.open_cost.size()) != nf) out.push_back("open cost list size mismatch");
  if (inst.dist.size() != static_cast<size_t>(nf) * nc) out.push_back("distance table size mismatch");
  if (!out.empty()) return out;

  for (int j = 0; j < nc; ++j) {
    if (sgn(inst.demand[j]) < 0) out.push_back("client " + inst.clients[j] + " has negative demand");
  }
  for (int i = 0; i < nf; ++i) {
    if (sgn(inst.open_cost[i]) < 0) {
      out.push_back("facility " + inst.facilities[i] + " has negative opening cost");
    }
    for (int j = 0; j < nc; ++j) {
      const Distance& d = inst.distance(i, j);
      if (d && sgn(*d) < 0) {
        out.push_back("distance " + inst.facilities[i] + "-" + inst.clients[j] + " is negative");
      }
    }
  }

  // Facility-client-facility-client chains: c_ij <= c_ik + c_i'k + c_i'j.
  for (int i = 0; i < nf; ++i) {
    for (int j = 0; j < nc; ++j) {
      for (int k = 0; k < nc; ++k) {
        const Distance& ik = inst.distance(i, k);
        if (!ik || k == j) continue;
        for (int i2 = 0; i2 < nf; ++i2) {
          if (i2 == i) continue;
          const Distance& i2k = inst.distance(i2, k);
          const Distance& i2j = inst.distance(i2, j);
          if (!i2k || !i2j) continue;
          Rational bound = *ik + *i2k + *i2j;
          const Distance& ij = inst.distance(i, j);
          if (!ij || *ij > bound) {
            out.push_back("triangle violation: c(" + inst.facilities[i] + "," + inst.clients[j] +
                          ") = " + (ij ? to_string(*ij) : std::string("forbidden")) + " > " +
                          to_string(bound) + " via " + inst.clients[k] + ", " + inst.facilities[i2]);
          }
        }
      }
    }
  }

  FacilitySet everyone(nf);
  for (int i = 0; i < nf; ++i) everyone[i] = i;
  if (inst.matroid.ground() != everyone) out.push_back("matroid ground set is not the facility set");
  for (const auto& v : structural_violations(inst.matroid)) out.push_back("matroid: " + v);

  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PenaltyVariant>) {
          if (static_cast<int>(v.penalty.size()) != nc) {
            out.push_back("penalty list size mismatch");
            return;
          }
          for (int j = 0; j < nc; ++j) {
            if (sgn(v.penalty[j]) < 0) out.push_back("client " + inst.clients[j] + " has negative penalty");
          }
        } else if constexpr (std::is_same_v<T, TwoMatroidVariant>) {
          check_split(inst, v.f1, v.f2, v.bounds, out);
          if (v.matroid2.ground() != v.f2) out.push_back("second matroid ground set is not F2");
          for (const auto& e : structural_violations(v.matroid2)) out.push_back("second matroid: " + e);
        } else if constexpr (std::is_same_v<T, LaminarVariant>) {
          check_split(inst, v.f1, v.f2, v.bounds, out);
          for (size_t s = 0; s < v.family.size(); ++s) {
            const auto& a = v.family[s].members;
            if (!std::includes(v.f2.begin(), v.f2.end(), a.begin(), a.end())) {
              out.push_back("laminar set " + std::to_string(s) + " leaves F2");
            }
            if (v.family[s].lower < 0 || v.family[s].lower > v.family[s].upper) {
              out.push_back("laminar set " + std::to_string(s) + " has bounds out of order");
            }
            for (size_t t = s + 1; t < v.family.size(); ++t) {
              const auto& b = v.family[t].members;
              FacilitySet both;
              std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
              if (!both.empty() && both != a && both != b) {
                out.push_back("laminar sets " + std::to_string(s) + " and " + std::to_string(t) +
                              " cross");
              }
            }
          }
        } else if constexpr (std::is_same_v<T, KnapsackVariant>) {
          if (static_cast<int>(v.weight.size()) != nf) {
            out.push_back("weight list size mismatch");
            return;
          }
          if (sgn(v.budget) < 0) out.push_back("knapsack budget is negative");
          for (int i = 0; i < nf; ++i) {
            if (sgn(v.weight[i]) < 0) {
              out.push_back("facility " + inst.facilities[i] + " has negative weight");
            } else if (v.weight[i] > v.budget) {
              out.push_back("facility " + inst.facilities[i] + " weight " + to_string(v.weight[i]) +
                            " exceeds budget " + to_string(v.budget));
            }
          }
          if (structural_violations(inst.matroid).empty() && inst.matroid.ground() == everyone &&
              rank(inst.matroid, inst.matroid.ground()) != nf) {
            out.push_back("knapsack instances need a free matroid");
          }
        } else if constexpr (std::is_same_v<T, IntersectionVariant>) {
          if (v.matroid2.ground() != everyone) {
            out.push_back("second matroid ground set is not the facility set");
          }
          for (const auto& e : structural_violations(v.matroid2)) out.push_back("second matroid: " + e);
        }
      },
      inst.variant);
  return out;
}

}  // namespace matmed
