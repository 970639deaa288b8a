// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MATMED_SIMPLEX_HPP_
#define MATMED_SIMPLEX_HPP_

#include <vector>

#include "matmed/linear_system.hpp"
#include "matmed/rational.hpp"

namespace matmed {

enum class Goal { kMinimize, kMaximize };

struct SimplexStats {
  int pivots = 0;
  int redundant_rows = 0;
};

struct SimplexResult {
  VertexPoint vertex;  // optimal basic solution
  Rational value;
  SimplexStats stats;
};

// Two-phase primal simplex on a dense exact tableau with Bland's rule.
// Throws InfeasibleError or UnboundedError.
SimplexResult simplex_solve(const LinearSystem& system, const std::vector<Rational>& objective,
                            Goal goal = Goal::kMinimize);

}  // namespace matmed

#endif  // MATMED_SIMPLEX_HPP_
