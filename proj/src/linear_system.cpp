// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/linear_system.hpp"

#include <algorithm>
#include <map>

#include "matmed/errors.hpp"

namespace matmed {

const char* tag_name(RowTag tag) {
  switch (tag) {
    case RowTag::kRankCut: return "rank";
    case RowTag::kFacilityLower: return "facility_lower";
    case RowTag::kNeighborhood: return "neighborhood";
    case RowTag::kCluster: return "cluster";
    case RowTag::kBound: return "bound";
    case RowTag::kKnapsack: return "knapsack";
    case RowTag::kAssignment: return "assignment";
    case RowTag::kLinking: return "linking";
  }
  return "?";
}

Rational Row::activity(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [var, coef] : terms) total += coef * point[var];
  return total;
}

bool Row::satisfied_by(const std::vector<Rational>& point) const {
  int c = cmp(activity(point), rhs);
  switch (sense) {
    case Sense::kLessEqual: return c <= 0;
    case Sense::kGreaterEqual: return c >= 0;
    case Sense::kEqual: return c == 0;
  }
  return false;
}

bool Row::tight_at(const std::vector<Rational>& point) const { return activity(point) == rhs; }

Row sum_row(const std::vector<int>& vars, Sense sense, Rational rhs, RowTag tag) {
  Row row;
  for (int v : vars) row.terms.emplace_back(v, Rational(1));
  row.sense = sense;
  row.rhs = std::move(rhs);
  row.tag = tag;
  return row;
}

int LinearSystem::add_row(Row row) {
  std::map<int, Rational> merged;
  for (auto& [var, coef] : row.terms) {
    if (var < 0 || var >= num_vars_) {
      throw InvalidArgument("row references undeclared variable " + std::to_string(var));
    }
    merged[var] += coef;
  }
  row.terms.clear();
  for (auto& [var, coef] : merged) {
    if (sgn(coef) != 0) row.terms.emplace_back(var, coef);
  }
  rows_.push_back(std::move(row));
  return static_cast<int>(rows_.size()) - 1;
}

bool LinearSystem::feasible(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != num_vars_) return false;
  for (const auto& v : point) {
    if (sgn(v) < 0) return false;
  }
  return std::all_of(rows_.begin(), rows_.end(), [&](const Row& r) { return r.satisfied_by(point); });
}

std::vector<int> LinearSystem::tight_rows(const std::vector<Rational>& point) const {
  std::vector<int> out;
  for (int k = 0; k < num_rows(); ++k) {
    if (rows_[k].tight_at(point)) out.push_back(k);
  }
  return out;
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < m.size(); ++c) {
    size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = rank + 1; r < m.size(); ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

VertexPoint certify_point(const LinearSystem& system, const std::vector<Rational>& point) {
  VertexPoint vp;
  vp.values = point;
  vp.tight = system.tight_rows(point);
  std::vector<int> support;
  for (int v = 0; v < system.num_vars(); ++v) {
    if (sgn(point[v]) != 0) support.push_back(v);
  }
  vp.support_size = static_cast<int>(support.size());
  std::vector<std::vector<Rational>> sub;
  for (int k : vp.tight) {
    std::vector<Rational> line(support.size());
    for (const auto& [var, coef] : system.row(k).terms) {
      auto it = std::lower_bound(support.begin(), support.end(), var);
      if (it != support.end() && *it == var) line[it - support.begin()] = coef;
    }
    sub.push_back(std::move(line));
  }
  vp.tight_rank = support.empty() ? 0 : matrix_rank(std::move(sub));
  return vp;
}

Rational LinearObjective::operator()(const std::vector<Rational>& point) const {
  Rational total = constant;
  for (size_t v = 0; v < coef.size(); ++v) {
    if (sgn(coef[v]) != 0) total += coef[v] * point[v];
  }
  return total;
}

}  // namespace matmed
