// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/simplex.hpp"

#include "matmed/errors.hpp"

namespace matmed {
namespace {

class Tableau {
 public:
  Tableau(const LinearSystem& system) : structural_(system.num_vars()) {
    const int m = system.num_rows();
    // Column layout: structural | slack or surplus | artificial.
    int slack_count = 0, artificial_count = 0;
    std::vector<Sense> senses(m);
    std::vector<bool> flip(m);
    for (int r = 0; r < m; ++r) {
      const Row& row = system.row(r);
      flip[r] = sgn(row.rhs) < 0;
      Sense s = row.sense;
      if (flip[r] && s != Sense::kEqual) s = s == Sense::kLessEqual ? Sense::kGreaterEqual : Sense::kLessEqual;
      senses[r] = s;
      if (s != Sense::kEqual) ++slack_count;
      if (s != Sense::kLessEqual) ++artificial_count;
    }
    first_artificial_ = structural_ + slack_count;
    cols_ = first_artificial_ + artificial_count;
    rows_.assign(m, std::vector<Rational>(cols_ + 1));
    basis_.assign(m, -1);
    int next_slack = structural_, next_artificial = first_artificial_;
    for (int r = 0; r < m; ++r) {
      const Row& row = system.row(r);
      auto& line = rows_[r];
      for (const auto& [var, coef] : row.terms) line[var] = flip[r] ? Rational(-coef) : coef;
      line[cols_] = flip[r] ? Rational(-row.rhs) : row.rhs;
      if (senses[r] == Sense::kLessEqual) {
        line[next_slack] = 1;
        basis_[r] = next_slack++;
      } else {
        if (senses[r] == Sense::kGreaterEqual) line[next_slack++] = -1;
        line[next_artificial] = 1;
        basis_[r] = next_artificial++;
      }
    }
    objective_.assign(cols_ + 1, Rational(0));
    blocked_.assign(cols_, false);
  }

  // Phase one: minimize the artificial sum. False if it stays positive.
  bool find_feasible_basis(SimplexStats& stats) {
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (basis_[r] < first_artificial_) continue;
      for (int c = 0; c <= cols_; ++c) {
        if (c >= first_artificial_ && c < cols_) continue;
        objective_[c] -= rows_[r][c];
      }
    }
    run(stats);
    if (sgn(objective_[cols_]) != 0) return false;
    // Pivot remaining zero-level artificials out of the basis, dropping rows
    // that turn out redundant.
    for (int r = static_cast<int>(rows_.size()) - 1; r >= 0; --r) {
      if (basis_[r] < first_artificial_) continue;
      int col = -1;
      for (int c = 0; c < first_artificial_ && col < 0; ++c) {
        if (sgn(rows_[r][c]) != 0) col = c;
      }
      if (col < 0) {
        rows_.erase(rows_.begin() + r);
        basis_.erase(basis_.begin() + r);
        ++stats.redundant_rows;
      } else {
        pivot(r, col);
        ++stats.pivots;
      }
    }
    for (int c = first_artificial_; c < cols_; ++c) blocked_[c] = true;
    return true;
  }

  void optimize(const std::vector<Rational>& cost, SimplexStats& stats) {
    objective_.assign(cols_ + 1, Rational(0));
    for (int c = 0; c < structural_; ++c) objective_[c] = cost[c];
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      int b = basis_[r];
      if (b >= structural_ || sgn(cost[b]) == 0) continue;
      const Rational factor = cost[b];
      for (int c = 0; c <= cols_; ++c) {
        if (sgn(rows_[r][c]) != 0) objective_[c] -= factor * rows_[r][c];
      }
    }
    run(stats);
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(structural_);
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < structural_) x[basis_[r]] = rows_[r][cols_];
    }
    return x;
  }

 private:
  void run(SimplexStats& stats) {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < cols_; ++c) {
        if (!blocked_[c] && sgn(objective_[c]) < 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return;
      int leave = -1;
      Rational best_ratio;
      for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
        if (sgn(rows_[r][enter]) <= 0) continue;
        Rational ratio = rows_[r][cols_] / rows_[r][enter];
        if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) throw UnboundedError("linear program is unbounded");
      pivot(leave, enter);
      ++stats.pivots;
    }
  }

  void pivot(int pr, int pc) {
    auto& prow = rows_[pr];
    const Rational inv = 1 / prow[pc];
    std::vector<int> nonzero;
    for (int c = 0; c <= cols_; ++c) {
      if (sgn(prow[c]) == 0) continue;
      prow[c] *= inv;
      nonzero.push_back(c);
    }
    mpq_class scratch;
    auto eliminate = [&](std::vector<Rational>& line) {
      if (sgn(line[pc]) == 0) return;
      const Rational factor = line[pc];
      for (int c : nonzero) {
        mpq_mul(scratch.get_mpq_t(), factor.get_mpq_t(), prow[c].get_mpq_t());
        mpq_sub(line[c].get_mpq_t(), line[c].get_mpq_t(), scratch.get_mpq_t());
      }
    };
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (r != pr) eliminate(rows_[r]);
    }
    eliminate(objective_);
    basis_[pr] = pc;
  }

  int structural_;
  int first_artificial_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> rows_;  // last entry is the right-hand side
  std::vector<Rational> objective_;          // reduced costs, then minus the value
  std::vector<int> basis_;
  std::vector<bool> blocked_;
};

}  // namespace

SimplexResult simplex_solve(const LinearSystem& system, const std::vector<Rational>& objective,
                            Goal goal) {
  if (static_cast<int>(objective.size()) != system.num_vars()) {
    throw InvalidArgument("objective length differs from the variable count");
  }
  SimplexResult result;
  Tableau tableau(system);
  if (!tableau.find_feasible_basis(result.stats)) throw InfeasibleError("linear program is infeasible");
  std::vector<Rational> cost = objective;
  if (goal == Goal::kMaximize) {
    for (auto& c : cost) c = -c;
  }
  tableau.optimize(cost, result.stats);
  std::vector<Rational> x = tableau.solution();
  result.value = 0;
  for (size_t v = 0; v < x.size(); ++v) result.value += objective[v] * x[v];
  result.vertex = certify_point(system, x);
  return result;
}

}  // namespace matmed
