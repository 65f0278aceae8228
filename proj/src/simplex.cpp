#include "dirflow/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace dirflow {

namespace {

struct Tableau {
  // rows: m constraint rows, each of width total+1 (last cell = rhs).
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> obj;  // reduced costs, width total+1 (last = value)
  std::vector<int> basis;     // basic variable per row
  int total = 0;

  void pivot(int r, int c) {
    Rational piv = rows[r][c];
    for (auto& v : rows[r]) v /= piv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if ((int)i == r) continue;
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (int j = 0; j <= total; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (obj[c] != 0) {
      Rational f = obj[c];
      for (int j = 0; j <= total; ++j) obj[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Returns false when optimal, throws on unbounded.
  bool step(bool greedy) {
    int enter = -1;
    if (greedy) {
      Rational best = 0;
      for (int j = 0; j < total; ++j)
        if (obj[j] < best) {
          best = obj[j];
          enter = j;
        }
    } else {
      for (int j = 0; j < total; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
    }
    if (enter < 0) return false;
    int leave = -1;
    Rational best_ratio = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][enter] <= 0) continue;
      Rational ratio = rows[i][total] / rows[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = (int)i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw LpStatus::Unbounded;
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& lp, PivotRule rule) {
  const int n = lp.num_vars;
  assert((int)lp.objective.size() == n);

  // Normalize rows to nonnegative rhs, count slack/artificial columns.
  struct Row {
    std::vector<Rational> a;
    Relation rel;
    Rational b;
  };
  std::vector<Row> norm;
  norm.reserve(lp.rows.size());
  for (const auto& r : lp.rows) {
    assert((int)r.coeffs.size() == n);
    Row row{r.coeffs, r.rel, r.rhs};
    if (row.b < 0) {
      for (auto& v : row.a) v = -v;
      row.b = -row.b;
      if (row.rel == Relation::LE)
        row.rel = Relation::GE;
      else if (row.rel == Relation::GE)
        row.rel = Relation::LE;
    }
    norm.push_back(std::move(row));
  }

  const int m = (int)norm.size();
  int num_slack = 0;
  for (const auto& r : norm)
    if (r.rel != Relation::EQ) ++num_slack;

  Tableau t;
  t.total = n + num_slack + m;  // artificial column reserved per row
  const int art_base = n + num_slack;
  t.rows.assign(m, std::vector<Rational>(t.total + 1, Rational(0)));
  t.basis.assign(m, -1);

  int slack_at = n;
  std::vector<int> artificial_of(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t.rows[i][j] = norm[i].a[j];
    t.rows[i][t.total] = norm[i].b;
    if (norm[i].rel == Relation::LE) {
      t.rows[i][slack_at] = 1;
      t.basis[i] = slack_at++;
    } else if (norm[i].rel == Relation::GE) {
      t.rows[i][slack_at] = -1;
      ++slack_at;
    }
    if (t.basis[i] < 0) {
      int art = art_base + i;
      t.rows[i][art] = 1;
      t.basis[i] = art;
      artificial_of[i] = art;
    }
  }

  // Phase 1: minimize the sum of artificial variables.
  t.obj.assign(t.total + 1, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (artificial_of[i] < 0) continue;
    for (int j = 0; j <= t.total; ++j)
      if (j != artificial_of[i]) t.obj[j] -= t.rows[i][j];
  }

  const long greedy_budget = 200 + 20L * (m + t.total);
  long iter = 0;
  auto run = [&]() {
    for (;;) {
      bool greedy = rule == PivotRule::DantzigBland && iter < greedy_budget;
      if (!t.step(greedy)) break;
      ++iter;
    }
  };

  LpSolution sol;
  try {
    run();
  } catch (LpStatus) {
    // Phase-1 objective is bounded below by 0; unbounded cannot happen.
    sol.status = LpStatus::Infeasible;
    return sol;
  }
  if (-t.obj[t.total] > 0) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }

  // Drive any basic artificial (value 0) out, or drop its redundant row.
  for (size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < art_base) {
      ++i;
      continue;
    }
    int piv_col = -1;
    for (int j = 0; j < art_base; ++j)
      if (t.rows[i][j] != 0) {
        piv_col = j;
        break;
      }
    if (piv_col >= 0) {
      t.pivot((int)i, piv_col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }

  // Phase 2: real objective (converted to minimization), artificials fixed at 0.
  std::vector<Rational> cost(t.total, Rational(0));
  for (int j = 0; j < n; ++j)
    cost[j] = lp.maximize ? -lp.objective[j] : lp.objective[j];

  t.obj.assign(t.total + 1, Rational(0));
  for (int j = 0; j < t.total; ++j) t.obj[j] = cost[j];
  for (size_t i = 0; i < t.rows.size(); ++i) {
    Rational cb = cost[t.basis[i]];
    if (cb == 0) continue;
    for (int j = 0; j <= t.total; ++j) t.obj[j] -= cb * t.rows[i][j];
  }
  for (int j = art_base; j < t.total; ++j) t.obj[j] = 0;
  // Block artificials from re-entering by clearing their columns.
  for (auto& row : t.rows)
    for (int j = art_base; j < t.total; ++j) row[j] = 0;

  try {
    run();
  } catch (LpStatus) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.x.assign(n, Rational(0));
  for (size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.rows[i][t.total];
  Rational value = -t.obj[t.total];
  sol.objective = lp.maximize ? -value : value;
  return sol;
}

}  // namespace dirflow
