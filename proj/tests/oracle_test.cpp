// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/oracle.hpp"

#include <gtest/gtest.h>

#include "matmed/errors.hpp"
#include "matmed/matroid.hpp"
#include "matmed/reductions.hpp"
#include "matmed/relaxation.hpp"
#include "support/test_support.hpp"

namespace matmed {
namespace {

using testing::line_instance;
using testing::load_fixture;
using testing::range_set;

const char* const kKinds[] = {"uniform", "partition", "laminar", "graphic", "explicit"};
const char* const kVariants[] = {"plain", "penalty", "two_matroid", "laminar", "knapsack"};

int count_in(const FacilitySet& open, const FacilitySet& members) {
  int c = 0;
  for (int i : open) c += std::binary_search(members.begin(), members.end(), i);
  return c;
}

bool bounds_hold(const CardinalityBounds& b, const FacilitySet& open, const FacilitySet& f1,
                 const FacilitySet& f2) {
  const int n1 = count_in(open, f1), n2 = count_in(open, f2), n = static_cast<int>(open.size());
  return b.lb1 <= n1 && n1 <= b.ub1 && b.lb2 <= n2 && n2 <= b.ub2 && b.lb <= n && n <= b.ub;
}

// Written straight from the variant definitions.
bool feasible_open_set(const MedianInstance& inst, const FacilitySet& open) {
  if (!is_independent(inst.matroid, open)) return false;
  if (const auto* v = std::get_if<TwoMatroidVariant>(&inst.variant)) {
    FacilitySet on_f2;
    for (int i : open) {
      if (std::binary_search(v->f2.begin(), v->f2.end(), i)) on_f2.push_back(i);
    }
    return is_independent(v->matroid2, on_f2) && bounds_hold(v->bounds, open, v->f1, v->f2);
  }
  if (const auto* v = std::get_if<LaminarVariant>(&inst.variant)) {
    for (const auto& a : v->family) {
      const int c = count_in(open, a.members);
      if (c < a.lower || c > a.upper) return false;
    }
    return bounds_hold(v->bounds, open, v->f1, v->f2);
  }
  if (const auto* v = std::get_if<KnapsackVariant>(&inst.variant)) {
    Rational weight = 0;
    for (int i : open) weight += v->weight[i];
    return weight <= v->budget;
  }
  if (const auto* v = std::get_if<IntersectionVariant>(&inst.variant)) return is_independent(v->matroid2, open);
  return true;
}

std::optional<Rational> brute_optimum(const MedianInstance& inst) {
  const int n = inst.num_facilities();
  const auto* penalty = std::get_if<PenaltyVariant>(&inst.variant);
  std::optional<Rational> best;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    FacilitySet open;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) open.push_back(i);
    }
    if (!feasible_open_set(inst, open)) continue;
    Rational cost = 0;
    bool served = true;
    for (int i : open) cost += inst.open_cost[i];
    for (int j = 0; j < inst.num_clients() && served; ++j) {
      std::optional<Rational> near;
      for (int i : open) {
        const auto& d = inst.distance(i, j);
        if (d && (!near || *d < *near)) near = *d;
      }
      if (penalty && (!near || penalty->penalty[j] < *near)) near = penalty->penalty[j];
      if (!near) served = sgn(inst.demand[j]) == 0;
      else cost += inst.demand[j] * *near;
    }
    if (served && (!best || cost < *best)) best = cost;
  }
  return best;
}

MedianInstance random_instance(uint64_t seed, const char* variant, int facilities = 8) {
  GeneratorParams params;
  params.facilities = facilities;
  params.clients = 5;
  params.matroid = kKinds[seed % 5];
  params.variant = variant;
  return generate_random(seed, params);
}

TEST(Exact, LineFixture) {
  const auto sol = exact_solve(load_fixture("line_i1.json"));
  EXPECT_EQ(sol.total(), Rational(2));
  EXPECT_EQ(sol.open, FacilitySet{0});
  EXPECT_EQ(sol.assignment, (std::vector<std::optional<int>>{0, 0}));
}

TEST(Exact, NoClientsOpensNothing) {
  MedianInstance inst = line_instance({0, 1}, {}, MatroidSpec::uniform({0, 1}, 1), {Rational(3), Rational(0)});
  const auto sol = exact_solve(inst);
  EXPECT_TRUE(sol.open.empty());
  EXPECT_EQ(sol.total(), Rational(0));
}

TEST(Exact, PenaltyFixture) {
  const auto sol = exact_solve(load_fixture("penalty_single.json"));
  EXPECT_EQ(sol.total(), Rational(2));
  EXPECT_TRUE(sol.open.empty());
}

TEST(Exact, TiesGoToTheLexicographicallySmallestSet) {
  const MedianInstance inst = line_instance({0, 0, 4}, {0}, MatroidSpec::uniform(range_set(3), 1));
  EXPECT_EQ(exact_solve(inst).open, FacilitySet{0});
}

TEST(Exact, ErrorsAndCaps) {
  MedianInstance laminar = line_instance({0, 1}, {0}, MatroidSpec::uniform({0, 1}, 1));
  laminar.set_distance(1, 0, std::nullopt);
  laminar.variant = LaminarVariant{{0}, {1}, {{{1}, 1, 1}}, {1, 1, 0, 1, 0, 2}};
  EXPECT_THROW(exact_solve(laminar), InfeasibleError);
  EXPECT_THROW(exact_solve(random_instance(0, "plain", 8), 7), SizeCapError);
}

TEST(Exact, MatchesBruteForceOnEveryVariant) {
  for (const char* variant : kVariants) {
    for (uint64_t seed = 0; seed < 30; ++seed) {
      const MedianInstance inst = random_instance(seed, variant);
      const auto expected = brute_optimum(inst);
      if (!expected) {
        EXPECT_THROW(exact_solve(inst), InfeasibleError);
        continue;
      }
      const auto sol = exact_solve(inst);
      ASSERT_EQ(sol.total(), *expected) << variant << " seed " << seed;
      ASSERT_TRUE(solution_violations(inst, sol).empty());
    }
  }
}

TEST(Exact, NeverBelowTheRelaxation) {
  for (const char* variant : kVariants) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      const MedianInstance inst = random_instance(seed, variant, 7);
      Rational best;
      try {
        best = exact_solve(inst).total();
      } catch (const InfeasibleError&) {
        continue;
      }
      ASSERT_LE(solve_relaxation(inst).objective, best) << variant << " seed " << seed;
    }
  }
}

TEST(Exact, RelaxingTheMatroidNeverHurts) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const MedianInstance inst = random_instance(seed, "plain", 7);
    MedianInstance free = inst;
    free.matroid = MatroidSpec::uniform(range_set(inst.num_facilities()), inst.num_facilities());
    ASSERT_LE(exact_solve(free).total(), exact_solve(inst).total());
  }
}

TEST(ZeroCost, PathAndIsolatedNode) {
  EXPECT_TRUE(exact_zero_cost_decision(
      generate_hardness_instance(parse_digraph(testing::read_fixture("hardness_path.json")))));
  MedianInstance inst = line_instance({0, 0}, {0, 0}, MatroidSpec::partition({{{0}, 1}, {{1}, 1}}));
  inst.set_distance(1, 0, std::nullopt);
  inst.set_distance(0, 1, std::nullopt);
  inst.variant = IntersectionVariant{MatroidSpec::partition({{{0, 1}, 1}})};
  EXPECT_FALSE(exact_zero_cost_decision(inst));
  std::get<IntersectionVariant>(inst.variant).matroid2 = MatroidSpec::partition({{{0}, 1}, {{1}, 1}});
  EXPECT_TRUE(exact_zero_cost_decision(inst));
}

TEST(ZeroCost, RejectsOtherShapes) {
  EXPECT_THROW(exact_zero_cost_decision(load_fixture("line_i1.json")), InvalidArgument);
}

}  // namespace
}  // namespace matmed
