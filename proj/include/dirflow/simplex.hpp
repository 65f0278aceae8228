#pragma once

#include <vector>

#include "dirflow/rational.hpp"

namespace dirflow {

// Dense exact-rational simplex. Variables are implicitly nonnegative.
// Bland's rule is the default (guaranteed termination); DantzigBland starts
// greedy and falls back to Bland after a fixed iteration budget.

enum class Relation { LE, GE, EQ };
enum class PivotRule { Bland, DantzigBland };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
  std::vector<Rational> coeffs;
  Relation rel;
  Rational rhs;
};

struct LpProblem {
  int num_vars = 0;
  bool maximize = false;
  std::vector<Rational> objective;
  std::vector<LpConstraint> rows;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective = 0;
  std::vector<Rational> x;
};

LpSolution solve_lp(const LpProblem& lp, PivotRule rule = PivotRule::Bland);

}  // namespace dirflow
