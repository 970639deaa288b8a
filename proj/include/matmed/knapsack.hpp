// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Knapsack median: a guess of the optimal connection cost bounds how far each
// client may be served, the strengthened LP is rounded through a nearly
// half-integral point, and an outer loop tries every guess.

#ifndef MATMED_KNAPSACK_HPP_
#define MATMED_KNAPSACK_HPP_

#include <vector>

#include "matmed/instance.hpp"
#include "matmed/rational.hpp"

namespace matmed {

struct KnapsackGuess {
  Rational connection;          // guessed optimal connection cost
  Rational facility;            // guessed largest opening cost in an optimum
  std::vector<Distance> radius; // U_j per client; nullopt when unbounded
};

// U_j = max{z : sum_k d_k max(0, z - c_jk) <= connection}, over every client
// k with a finite client distance to j (j itself at distance 0).
std::vector<Distance> compute_radii(const MedianInstance& instance, const Rational& connection);

KnapsackGuess make_guess(const MedianInstance& instance, const Rational& connection,
                         const Rational& facility);

// One rounding run for a fixed guess. Facilities heavier than the budget or
// dearer than the guessed opening cost are closed. Throws InfeasibleError when
// the guess leaves the LP infeasible and InvalidArgument on a non-knapsack
// instance.
RoundedSolution round_knapsack_once(const MedianInstance& instance, const KnapsackGuess& guess);

// Candidate guesses: connection costs {0} and lo (1+eps)^t up to the first
// value >= hi, where lo is the cheapest positive single assignment and hi is
// the total demand times the largest finite distance.
std::vector<Rational> connection_grid(const MedianInstance& instance, const Rational& epsilon);
// Distinct opening costs of facilities that fit in the budget, ascending.
std::vector<Rational> facility_grid(const MedianInstance& instance);

// Cheapest result over all guesses, the first in grid order on ties. Throws
// InvalidArgument unless epsilon > 0 and InfeasibleError when no guess works.
RoundedSolution knapsack_median(const MedianInstance& instance, const Rational& epsilon);

}  // namespace matmed

#endif  // MATMED_KNAPSACK_HPP_
