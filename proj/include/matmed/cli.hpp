// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The `matmed` command line and the variant dispatch it shares with tests.

#ifndef MATMED_CLI_HPP_
#define MATMED_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "matmed/instance.hpp"
#include "matmed/rounding.hpp"

namespace matmed {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInfeasible = 2,
  kExitInvalid = 3,
};

struct SolveOptions {
  RoundingMode mode = RoundingMode::kImproved;  // plain instances only
  Rational epsilon = rat(1, 10);                // knapsack grid step
  // Knapsack only: run one fixed guess instead of the grid.
  std::optional<Rational> connection_guess;
  std::optional<Rational> facility_guess;
};

struct SolveReport {
  RoundedSolution solution;
  Rational lp;  // value of the instance's own relaxation
};

// Runs the approximation matching the instance's variant. Throws
// InvalidArgument for intersection instances or a non-improved mode on a
// non-plain instance, InfeasibleError when the relaxation is infeasible.
SolveReport solve_instance(const MedianInstance& instance, const SolveOptions& options);

// JSON report of a solution: open set, assignment, cost split, certificate.
std::string solution_json(const MedianInstance& instance, const RoundedSolution& sol);

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matmed

#endif  // MATMED_CLI_HPP_
