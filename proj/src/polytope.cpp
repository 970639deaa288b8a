// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/polytope.hpp"

#include <algorithm>
#include <set>

#include "matmed/errors.hpp"

namespace matmed {
namespace {

// Null-space vector of the tight rows on the support, or empty when the
// tight rows already have full column rank there.
std::vector<Rational> descent_direction(const LinearSystem& system, const std::vector<Rational>& point,
                                        const std::vector<int>& tight) {
  std::vector<int> support;
  for (int v = 0; v < system.num_vars(); ++v) {
    if (sgn(point[v]) != 0) support.push_back(v);
  }
  const size_t cols = support.size();
  std::vector<std::vector<Rational>> m;
  for (int k : tight) {
    std::vector<Rational> line(cols);
    bool any = false;
    for (const auto& [var, coef] : system.row(k).terms) {
      auto it = std::lower_bound(support.begin(), support.end(), var);
      if (it != support.end() && *it == var) {
        line[it - support.begin()] = coef;
        any = true;
      }
    }
    if (any) m.push_back(std::move(line));
  }
  // Reduced row echelon form.
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < m.size(); ++c) {
    size_t p = rank;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    Rational inv = 1 / m[rank][c];
    for (size_t k = c; k < cols; ++k) m[rank][k] *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      Rational factor = m[r][c];
      for (size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  if (rank == cols) return {};
  size_t free_col = 0;
  for (size_t r = 0; r < pivot_col.size() && pivot_col[r] == static_cast<int>(free_col); ++r) ++free_col;
  std::vector<Rational> d(system.num_vars());
  d[support[free_col]] = 1;
  for (size_t r = 0; r < rank; ++r) {
    if (pivot_col[r] < static_cast<int>(free_col)) d[support[pivot_col[r]]] = -m[r][free_col];
  }
  return d;
}

// Largest t with point + t*d still satisfying row k (given it holds at t=0).
std::optional<Rational> row_limit(const Row& row, const std::vector<Rational>& point,
                                  const std::vector<Rational>& d) {
  Rational slope = row.activity(d);
  if (sgn(slope) == 0) return std::nullopt;
  Rational gap = row.rhs - row.activity(point);
  if (row.sense == Sense::kLessEqual && sgn(slope) > 0) return gap / slope;
  if (row.sense == Sense::kGreaterEqual && sgn(slope) < 0) return gap / slope;
  if (row.sense == Sense::kEqual) return Rational(0);
  return std::nullopt;
}

std::optional<Rational> step_limit(const LinearSystem& system, const std::vector<Rational>& point,
                                   const std::vector<Rational>& d) {
  std::optional<Rational> t;
  auto take = [&](const Rational& v) {
    if (!t || v < *t) t = v;
  };
  for (int v = 0; v < system.num_vars(); ++v) {
    if (sgn(d[v]) < 0) take(point[v] / -d[v]);
  }
  for (const Row& row : system.rows()) {
    if (auto lim = row_limit(row, point, d)) take(*lim);
  }
  return t;
}

}  // namespace

VertexPoint crash_to_extreme(LinearSystem& system, std::vector<Rational> point,
                             const LinearObjective& objective,
                             const std::vector<RowSeparator>& separators, CrashStats* stats) {
  CrashStats local;
  if (!system.feasible(point)) throw InvalidArgument("crash input point is infeasible");
  for (const auto& sep : separators) {
    if (sep(point)) throw InvalidArgument("crash input point violates a separated row");
  }
  for (;;) {
    std::vector<Rational> d = descent_direction(system, point, system.tight_rows(point));
    if (d.empty()) break;
    Rational slope = 0;
    for (size_t v = 0; v < d.size(); ++v) slope += objective.coef[v] * d[v];
    if (sgn(slope) > 0) {
      for (auto& x : d) x = -x;
      slope = -slope;
    }
    std::optional<Rational> t = step_limit(system, point, d);
    if (!t) {
      if (sgn(slope) != 0) throw InternalError("crash direction is unbounded");
      for (auto& x : d) x = -x;
      t = step_limit(system, point, d);
      if (!t) throw InternalError("crash polytope contains a line");
    }
    std::vector<Rational> next(point.size());
    for (;;) {
      for (size_t v = 0; v < point.size(); ++v) next[v] = point[v] + *t * d[v];
      bool cut = false;
      for (const auto& sep : separators) {
        if (auto row = sep(next)) {
          int k = system.add_row(std::move(*row));
          ++local.rows_added;
          auto lim = row_limit(system.row(k), point, d);
          if (!lim) throw InternalError("separated row is not limited along the crash direction");
          if (*lim < *t) t = *lim;
          cut = true;
          break;
        }
      }
      if (!cut) break;
    }
    point = std::move(next);
    ++local.moves;
  }
  if (stats) *stats = local;
  return certify_point(system, point);
}

bool certify_denominators(const std::vector<Rational>& point, const std::vector<long>& allowed) {
  return denominators_within(point, allowed);
}

namespace {

struct Echelon {
  std::vector<std::vector<Rational>> rows;  // each: n coefficients then rhs
  std::vector<int> pivots;
};

class VertexSearch {
 public:
  VertexSearch(const LinearSystem& system) : system_(system), n_(system.num_vars()) {
    for (const Row& row : system.rows()) {
      std::vector<Rational> line(n_ + 1);
      for (const auto& [var, coef] : row.terms) line[var] = coef;
      line[n_] = row.rhs;
      constraints_.push_back(std::move(line));
    }
    for (int v = 0; v < n_; ++v) {
      std::vector<Rational> line(n_ + 1);
      line[v] = 1;
      constraints_.push_back(std::move(line));
    }
  }

  std::vector<VertexPoint> run() {
    if (n_ == 0) {
      std::vector<Rational> empty;
      if (system_.feasible(empty)) found_.insert(empty);
    } else {
      Echelon e;
      search(0, e);
    }
    std::vector<VertexPoint> out;
    for (const auto& p : found_) out.push_back(certify_point(system_, p));
    return out;
  }

 private:
  void search(size_t start, const Echelon& e) {
    const size_t need = n_ - e.pivots.size();
    for (size_t k = start; k + need <= constraints_.size(); ++k) {
      std::vector<Rational> line = constraints_[k];
      for (size_t r = 0; r < e.rows.size(); ++r) {
        const Rational f = line[e.pivots[r]];
        if (sgn(f) == 0) continue;
        for (int c = 0; c <= n_; ++c) {
          if (sgn(e.rows[r][c]) != 0) line[c] -= f * e.rows[r][c];
        }
      }
      int pivot = -1;
      for (int c = 0; c < n_ && pivot < 0; ++c) {
        if (sgn(line[c]) != 0) pivot = c;
      }
      if (pivot < 0) continue;
      Rational inv = 1 / line[pivot];
      for (auto& x : line) x *= inv;
      Echelon next = e;
      for (auto& row : next.rows) {
        const Rational f = row[pivot];
        if (sgn(f) == 0) continue;
        for (int c = 0; c <= n_; ++c) row[c] -= f * line[c];
      }
      next.rows.push_back(std::move(line));
      next.pivots.push_back(pivot);
      if (need == 1) {
        std::vector<Rational> point(n_);
        for (size_t r = 0; r < next.rows.size(); ++r) point[next.pivots[r]] = next.rows[r][n_];
        if (system_.feasible(point)) found_.insert(point);
      } else {
        search(k + 1, next);
      }
    }
  }

  const LinearSystem& system_;
  const int n_;
  std::vector<std::vector<Rational>> constraints_;
  std::set<std::vector<Rational>> found_;
};

}  // namespace

std::vector<VertexPoint> enumerate_vertices(const LinearSystem& system) {
  if (system.num_vars() > 12) throw SizeCapError("vertex enumeration limited to 12 variables");
  return VertexSearch(system).run();
}

}  // namespace matmed
