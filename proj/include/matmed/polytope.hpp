// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MATMED_POLYTOPE_HPP_
#define MATMED_POLYTOPE_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "matmed/linear_system.hpp"

namespace matmed {

// Returns a row of the full polytope violated by the point, if any. Lets a
// system carry exponentially many rows implicitly.
using RowSeparator = std::function<std::optional<Row>(const std::vector<Rational>&)>;

struct CrashStats {
  int moves = 0;
  int rows_added = 0;
};

// Moves a feasible point to an extreme point without increasing `objective`.
// Each move follows the null-space direction of the tight rows on the
// support that belongs to the lowest free column, so the support only
// shrinks and tight rows stay tight. Violated rows reported by `separators`
// are appended to `system` as they are met. Throws InvalidArgument when the
// input point is infeasible.
VertexPoint crash_to_extreme(LinearSystem& system, std::vector<Rational> point,
                             const LinearObjective& objective,
                             const std::vector<RowSeparator>& separators = {},
                             CrashStats* stats = nullptr);

bool certify_denominators(const std::vector<Rational>& point, const std::vector<long>& allowed);

// All vertices by basis enumeration, deduplicated and sorted. At most 12
// variables; throws SizeCapError beyond that.
std::vector<VertexPoint> enumerate_vertices(const LinearSystem& system);

}  // namespace matmed

#endif  // MATMED_POLYTOPE_HPP_
