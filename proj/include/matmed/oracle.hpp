// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive solvers over facility subsets, used as ground truth in tests and
// the bench report.

#ifndef MATMED_ORACLE_HPP_
#define MATMED_ORACLE_HPP_

#include "matmed/instance.hpp"

namespace matmed {

inline constexpr int kDefaultOracleCap = 16;
inline constexpr int kZeroCostDecisionCap = 12;

// Cheapest feasible open set, every client at its nearest open facility (or
// its penalty when strictly cheaper). Ties go to the lexicographically
// smallest open set. Accepts every variant. Throws SizeCapError above
// `max_facilities` and InfeasibleError when no open set is feasible.
RoundedSolution exact_solve(const MedianInstance& instance, int max_facilities = kDefaultOracleCap);

// Whether some open set independent in both matroids serves every client with
// positive demand at distance zero. Needs an intersection instance with at
// most kZeroCostDecisionCap facilities.
bool exact_zero_cost_decision(const MedianInstance& instance);

}  // namespace matmed

#endif  // MATMED_ORACLE_HPP_
