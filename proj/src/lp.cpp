// Copyright 2026 The corrlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corrlab/lp.hpp"

#include <stdexcept>

namespace corrlab {
namespace {

// Tableau with the objective (reduced cost) row stored last. Column `cols`
// holds the right-hand side.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows + 1) * (cols + 1)) {}

  mpq_class& at(int i, int j) { return data_[static_cast<std::size_t>(i) * (cols_ + 1) + j]; }
  const mpq_class& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * (cols_ + 1) + j];
  }
  mpq_class& rhs(int i) { return at(i, cols_); }
  mpq_class& cost(int j) { return at(rows_, j); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void pivot(int r, int c) {
    const mpq_class inv = 1 / at(r, c);
    for (int j = 0; j <= cols_; ++j) {
      if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    }
    std::vector<int> nz;
    for (int j = 0; j <= cols_; ++j) {
      if (sgn(at(r, j)) != 0) nz.push_back(j);
    }
    mpq_class tmp;
    for (int i = 0; i <= rows_; ++i) {
      if (i == r || sgn(at(i, c)) == 0) continue;
      const mpq_class factor = at(i, c);
      for (const int j : nz) {
        tmp = factor * at(r, j);
        at(i, j) -= tmp;
      }
    }
  }

 private:
  int rows_;
  int cols_;
  std::vector<mpq_class> data_;
};

struct SimplexState {
  Tableau tab;
  std::vector<int> basis;
  std::int64_t pivots = 0;
};

// Loads reduced costs c_j - c_B B^-1 A_j into the objective row.
void load_costs(SimplexState& st, const std::vector<mpq_class>& cost) {
  Tableau& t = st.tab;
  for (int j = 0; j <= t.cols(); ++j) t.cost(j) = j < t.cols() ? cost[static_cast<std::size_t>(j)] : 0;
  for (int i = 0; i < t.rows(); ++i) {
    const mpq_class& cb = cost[static_cast<std::size_t>(st.basis[static_cast<std::size_t>(i)])];
    if (sgn(cb) == 0) continue;
    for (int j = 0; j <= t.cols(); ++j) {
      if (sgn(t.at(i, j)) != 0) t.cost(j) -= cb * t.at(i, j);
    }
  }
}

// Returns false when unbounded.
bool run(SimplexState& st, const std::vector<bool>& allowed) {
  Tableau& t = st.tab;
  while (true) {
    int enter = -1;
    for (int j = 0; j < t.cols(); ++j) {
      if (allowed[static_cast<std::size_t>(j)] && sgn(t.cost(j)) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;
    int leave = -1;
    mpq_class best_ratio;
    for (int i = 0; i < t.rows(); ++i) {
      if (sgn(t.at(i, enter)) <= 0) continue;
      mpq_class ratio = t.rhs(i) / t.at(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && st.basis[static_cast<std::size_t>(i)] <
                                      st.basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return false;
    t.pivot(leave, enter);
    st.basis[static_cast<std::size_t>(leave)] = enter;
    ++st.pivots;
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.constraints.size());
  if (static_cast<int>(lp.objective.size()) != n) {
    throw std::invalid_argument("objective length does not match num_vars");
  }

  // Column layout: [structural | slack/surplus (one per row) | artificial (one per row)].
  const int slack0 = n;
  const int art0 = n + m;
  const int cols = n + 2 * m;
  SimplexState st{Tableau(m, cols), std::vector<int>(static_cast<std::size_t>(m)), 0};
  std::vector<int> flip(static_cast<std::size_t>(m), 1);
  std::vector<int> unit_col(static_cast<std::size_t>(m));

  for (int i = 0; i < m; ++i) {
    const LpConstraint& con = lp.constraints[static_cast<std::size_t>(i)];
    if (static_cast<int>(con.coeffs.size()) != n) {
      throw std::invalid_argument("constraint length does not match num_vars");
    }
    Relation rel = con.relation;
    const int f = con.rhs.sign() < 0 ? -1 : 1;
    if (f < 0) {
      if (rel == Relation::kLessEqual) {
        rel = Relation::kGreaterEqual;
      } else if (rel == Relation::kGreaterEqual) {
        rel = Relation::kLessEqual;
      }
    }
    flip[static_cast<std::size_t>(i)] = f;
    for (int j = 0; j < n; ++j) {
      st.tab.at(i, j) = con.coeffs[static_cast<std::size_t>(j)].raw() * f;
    }
    st.tab.rhs(i) = con.rhs.raw() * f;
    if (rel == Relation::kLessEqual) {
      st.tab.at(i, slack0 + i) = 1;
      st.basis[static_cast<std::size_t>(i)] = slack0 + i;
      unit_col[static_cast<std::size_t>(i)] = slack0 + i;
    } else {
      if (rel == Relation::kGreaterEqual) st.tab.at(i, slack0 + i) = -1;
      st.tab.at(i, art0 + i) = 1;
      st.basis[static_cast<std::size_t>(i)] = art0 + i;
      unit_col[static_cast<std::size_t>(i)] = art0 + i;
    }
  }

  // Phase 1: minimise the sum of artificials that start in the basis.
  std::vector<mpq_class> cost1(static_cast<std::size_t>(cols), 0);
  bool need_phase1 = false;
  for (int i = 0; i < m; ++i) {
    if (st.basis[static_cast<std::size_t>(i)] >= art0) {
      cost1[static_cast<std::size_t>(st.basis[static_cast<std::size_t>(i)])] = 1;
      need_phase1 = true;
    }
  }
  std::vector<bool> allowed(static_cast<std::size_t>(cols), true);
  for (int i = 0; i < m; ++i) {
    // Artificials of <= rows never exist; keep them out of every phase.
    if (unit_col[static_cast<std::size_t>(i)] != art0 + i) {
      allowed[static_cast<std::size_t>(art0 + i)] = false;
    }
  }

  LpSolution sol;
  if (need_phase1) {
    load_costs(st, cost1);
    run(st, allowed);
    if (sgn(st.tab.cost(cols)) != 0) {
      sol.status = LpStatus::kInfeasible;
      sol.pivots = st.pivots;
      return sol;
    }
    // Drive zero-valued artificials out of the basis where possible. A row
    // with no structural/slack entry is redundant and stays inert.
    for (int i = 0; i < m; ++i) {
      if (st.basis[static_cast<std::size_t>(i)] < art0) continue;
      for (int j = 0; j < art0; ++j) {
        if (sgn(st.tab.at(i, j)) != 0) {
          st.tab.pivot(i, j);
          st.basis[static_cast<std::size_t>(i)] = j;
          ++st.pivots;
          break;
        }
      }
    }
  }
  for (int j = art0; j < cols; ++j) allowed[static_cast<std::size_t>(j)] = false;

  // Phase 2 on the minimisation form.
  const int sense = lp.maximize ? -1 : 1;
  std::vector<mpq_class> cost2(static_cast<std::size_t>(cols), 0);
  for (int j = 0; j < n; ++j) cost2[static_cast<std::size_t>(j)] = lp.objective[static_cast<std::size_t>(j)].raw() * sense;
  load_costs(st, cost2);
  if (!run(st, allowed)) {
    sol.status = LpStatus::kUnbounded;
    sol.pivots = st.pivots;
    return sol;
  }

  sol.status = LpStatus::kOptimal;
  sol.pivots = st.pivots;
  sol.x.assign(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < m; ++i) {
    const int b = st.basis[static_cast<std::size_t>(i)];
    if (b < n) sol.x[static_cast<std::size_t>(b)] = Rational(mpq_class(st.tab.rhs(i)));
  }
  // Objective row holds -(c_B B^-1 b) in the rhs column.
  sol.objective = Rational(mpq_class(-st.tab.cost(cols) * sense));
  sol.duals.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    // y_i = c_B B^-1 e_i = -(reduced cost of the column that started as e_i).
    const mpq_class y = -st.tab.cost(unit_col[static_cast<std::size_t>(i)]);
    sol.duals[static_cast<std::size_t>(i)] =
        Rational(mpq_class(y * flip[static_cast<std::size_t>(i)] * sense));
  }
  return sol;
}

}  // namespace corrlab
