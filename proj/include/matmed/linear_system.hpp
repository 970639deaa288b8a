// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Explicit linear systems over nonnegative variables. Every variable carries
// an implicit v >= 0; everything else is a row.

#ifndef MATMED_LINEAR_SYSTEM_HPP_
#define MATMED_LINEAR_SYSTEM_HPP_

#include <string>
#include <utility>
#include <vector>

#include "matmed/rational.hpp"

namespace matmed {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

enum class RowTag {
  kRankCut,
  kFacilityLower,  // v(F'_j) >= 1/2
  kNeighborhood,   // v(G_j) <= 1 (or = 1)
  kCluster,        // z(S_j) = 1
  kBound,          // cardinality and laminar-family bounds
  kKnapsack,
  kAssignment,
  kLinking,  // x_ij <= y_i
};

const char* tag_name(RowTag tag);

struct Row {
  std::vector<std::pair<int, Rational>> terms;  // sorted by variable, no zeros
  Sense sense = Sense::kLessEqual;
  Rational rhs;
  RowTag tag = RowTag::kBound;

  Rational activity(const std::vector<Rational>& point) const;
  bool satisfied_by(const std::vector<Rational>& point) const;
  bool tight_at(const std::vector<Rational>& point) const;
};

// Unit-coefficient row over `vars`.
Row sum_row(const std::vector<int>& vars, Sense sense, Rational rhs, RowTag tag);

class LinearSystem {
 public:
  LinearSystem() = default;
  explicit LinearSystem(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(int k) const { return rows_[k]; }
  int num_rows() const { return static_cast<int>(rows_.size()); }

  // Merges duplicate variables, drops zero terms; throws InvalidArgument on an
  // undeclared variable. Returns the row index.
  int add_row(Row row);

  bool feasible(const std::vector<Rational>& point) const;
  std::vector<int> tight_rows(const std::vector<Rational>& point) const;

 private:
  int num_vars_ = 0;
  std::vector<Row> rows_;
};

// A point of a system together with the rows tight at it.
struct VertexPoint {
  std::vector<Rational> values;
  std::vector<int> tight;
  // Rank of the tight rows restricted to the support columns; the point is
  // extreme iff this equals the support size.
  int tight_rank = 0;
  int support_size = 0;

  bool extreme() const { return tight_rank == support_size; }
};

// Exact rank of the tight-row submatrix on the support of `point`.
VertexPoint certify_point(const LinearSystem& system, const std::vector<Rational>& point);

// Linear functional c.v + constant.
struct LinearObjective {
  std::vector<Rational> coef;
  Rational constant;

  Rational operator()(const std::vector<Rational>& point) const;
};

// Exact rank of a dense rational matrix.
int matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace matmed

#endif  // MATMED_LINEAR_SYSTEM_HPP_
