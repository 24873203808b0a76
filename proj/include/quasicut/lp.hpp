#pragma once

#include <vector>

namespace quasicut {

enum class RowSense { less_eq, greater_eq, equal };

struct LpRow {
  std::vector<double> coeffs;  // dense, one per variable
  RowSense sense = RowSense::less_eq;
  double rhs = 0.0;
};

// min objective . x  subject to rows, x >= 0.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LpRow> rows;

  int var_count() const { return static_cast<int>(objective.size()); }
};

struct LpSolution {
  double value = 0.0;
  std::vector<double> x;
  int iterations = 0;
};

// Dense primal simplex, Bland's anti-cycling rule, big-M feasibility
// phase (the M terms are carried in a separate objective row and
// compared lexicographically, i.e. M is taken to dominate every finite
// cost). Throws Infeasible, Unbounded, or CycleSuspected after the
// iteration cap of 1e5.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace quasicut
