// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// LP relaxations of the median variants, solved by exact simplex inside a
// cutting-plane loop over matroid rank constraints.

#ifndef MATMED_RELAXATION_HPP_
#define MATMED_RELAXATION_HPP_

#include <functional>
#include <vector>

#include "matmed/instance.hpp"
#include "matmed/matroid.hpp"
#include "matmed/rational.hpp"

namespace matmed {

struct FractionalSolution {
  int num_facilities = 0;
  int num_clients = 0;
  std::vector<Rational> x;  // facility-major
  std::vector<Rational> y;
  std::vector<Rational> z;  // penalty variant only
  Rational objective;
  std::vector<Rational> assigned;     // X_j = sum_i x_ij
  std::vector<Rational> cbar;         // sum_i c_ij x_ij / X_j (0 when X_j = 0)
  std::vector<Rational> client_cost;  // LP_j = sum_i c_ij x_ij + pi_j z_j

  // Cuts y(S) <= r(S) added by the loop; `second` marks the second matroid.
  std::vector<std::pair<FacilitySet, bool>> cuts;
  int rounds = 0;
  int pivots = 0;

  const Rational& x_at(int facility, int client) const {
    return x[static_cast<size_t>(facility) * num_clients + client];
  }
};

struct RelaxationOptions {
  // Pairs for which this returns false get no x variable (knapsack radii).
  std::function<bool(int facility, int client)> admissible;
  // Facilities forced closed (knapsack preprocessing).
  std::vector<bool> closed;
  // Rank cuts to start from, e.g. from an earlier run.
  std::vector<std::pair<FacilitySet, bool>> initial_cuts;
  SeparationOptions separation;
};

// Optimal solution of the variant's LP. Zero-demand clients get no
// assignment row. Throws InfeasibleError for an infeasible LP and
// InvalidArgument for the intersection variant.
FractionalSolution solve_relaxation(const MedianInstance& instance,
                                    const RelaxationOptions& options = {});

}  // namespace matmed

#endif  // MATMED_RELAXATION_HPP_
