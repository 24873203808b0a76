#include "quasicut/lp.hpp"

#include <algorithm>
#include <cmath>

#include "quasicut/errors.hpp"

namespace quasicut {

namespace {

constexpr int kMaxIterations = 100000;
constexpr double kPivotEps = 1e-9;

// Full-tableau simplex. Column layout: structural variables, then one
// slack/surplus per row, then one artificial per >=/= row. Costs are
// (M-part, finite-part) pairs with M infinitely large; artificials
// cost (1, 0), structural variables (0, c_j).
struct Tableau {
  int rows = 0, cols = 0;
  std::vector<double> a;          // rows x cols
  std::vector<double> rhs;        // rows
  std::vector<double> cost_m;     // cols, M-part of reduced costs
  std::vector<double> cost_f;     // cols, finite part
  std::vector<int> basis;         // rows
  double obj_m = 0.0, obj_f = 0.0;

  double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int nv = lp.var_count();
  const int nr = static_cast<int>(lp.rows.size());
  for (const LpRow& row : lp.rows)
    if (static_cast<int>(row.coeffs.size()) != nv)
      throw Error(Errc::invalid_input, "row width differs from variable count");

  // Normalize to non-negative right-hand sides.
  std::vector<LpRow> rows = lp.rows;
  for (LpRow& row : rows) {
    if (row.rhs < 0.0) {
      for (double& c : row.coeffs) c = -c;
      row.rhs = -row.rhs;
      if (row.sense == RowSense::less_eq)
        row.sense = RowSense::greater_eq;
      else if (row.sense == RowSense::greater_eq)
        row.sense = RowSense::less_eq;
    }
  }

  int n_art = 0;
  for (const LpRow& row : rows)
    if (row.sense != RowSense::less_eq) ++n_art;

  Tableau t;
  t.rows = nr;
  t.cols = nv + nr + n_art;
  t.a.assign(static_cast<size_t>(t.rows) * t.cols, 0.0);
  t.rhs.resize(nr);
  t.cost_m.assign(t.cols, 0.0);
  t.cost_f.assign(t.cols, 0.0);
  t.basis.resize(nr);
  for (int j = 0; j < nv; ++j) t.cost_f[j] = lp.objective[j];

  int art = nv + nr;
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nv; ++j) t.at(i, j) = rows[i].coeffs[j];
    t.rhs[i] = rows[i].rhs;
    switch (rows[i].sense) {
      case RowSense::less_eq:
        t.at(i, nv + i) = 1.0;
        t.basis[i] = nv + i;
        break;
      case RowSense::greater_eq:
        t.at(i, nv + i) = -1.0;
        t.at(i, art) = 1.0;
        t.cost_m[art] = 1.0;
        t.basis[i] = art++;
        break;
      case RowSense::equal:
        t.at(i, art) = 1.0;
        t.cost_m[art] = 1.0;
        t.basis[i] = art++;
        break;
    }
  }

  // Reduced-cost rows, updated by the same pivots as the body.
  std::vector<double> red_m = t.cost_m, red_f = t.cost_f;
  for (int i = 0; i < nr; ++i) {
    const int b = t.basis[i];
    if (t.cost_m[b] != 0.0 || t.cost_f[b] != 0.0) {
      for (int j = 0; j < t.cols; ++j) {
        red_m[j] -= t.cost_m[b] * t.at(i, j);
        red_f[j] -= t.cost_f[b] * t.at(i, j);
      }
      t.obj_m -= t.cost_m[b] * t.rhs[i];
      t.obj_f -= t.cost_f[b] * t.rhs[i];
    }
  }

  // Residual value of the M objective: the artificial sum still basic.
  auto artificial_value = [&] {
    double v = 0.0;
    for (int i = 0; i < nr; ++i)
      if (t.basis[i] >= nv + nr) v += t.rhs[i];
    return v;
  };

  int iterations = 0;
  while (true) {
    if (++iterations > kMaxIterations)
      throw Error(Errc::cycle_suspected, "simplex iteration cap reached");

    // Bland's smallest index, M-improving columns first: entering a
    // finite-part column while the M part is still reducible could
    // stall on a ray and misreport an infeasible program as unbounded.
    int enter = -1, finite_enter = -1;
    for (int j = 0; j < t.cols; ++j) {
      if (red_m[j] < -kPivotEps) {
        enter = j;
        break;
      }
      if (finite_enter < 0 && red_m[j] <= kPivotEps && red_f[j] < -kPivotEps) finite_enter = j;
    }
    if (enter < 0) enter = finite_enter;
    if (enter < 0) break;

    // Min ratio; ties to the smallest basis variable (Bland).
    int leave = -1;
    double best = 0.0;
    for (int i = 0; i < nr; ++i) {
      const double piv = t.at(i, enter);
      if (piv <= kPivotEps) continue;
      const double ratio = t.rhs[i] / piv;
      if (leave < 0 || ratio < best - 1e-12 ||
          (std::abs(ratio - best) <= 1e-12 && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) {
      // No M-improving column exists here, so the M part is already at its
      // optimum; a positive residual certifies infeasibility, otherwise the
      // finite objective really is unbounded along this ray.
      if (red_m[enter] < -kPivotEps)
        throw Error(Errc::infeasible, "artificial objective unbounded");
      if (artificial_value() > 1e-7)
        throw Error(Errc::infeasible, "constraints are inconsistent");
      throw Error(Errc::unbounded, "objective unbounded below");
    }

    const double piv = t.at(leave, enter);
    for (int j = 0; j < t.cols; ++j) t.at(leave, j) /= piv;
    t.rhs[leave] /= piv;
    for (int i = 0; i < nr; ++i) {
      if (i == leave) continue;
      const double f = t.at(i, enter);
      if (f == 0.0) continue;
      for (int j = 0; j < t.cols; ++j) t.at(i, j) -= f * t.at(leave, j);
      t.rhs[i] -= f * t.rhs[leave];
    }
    const double fm = red_m[enter], ff = red_f[enter];
    if (fm != 0.0 || ff != 0.0) {
      for (int j = 0; j < t.cols; ++j) {
        red_m[j] -= fm * t.at(leave, j);
        red_f[j] -= ff * t.at(leave, j);
      }
      t.obj_m -= fm * t.rhs[leave];
      t.obj_f -= ff * t.rhs[leave];
    }
    t.basis[leave] = enter;
  }

  // Any residual artificial value means the original rows conflict.
  double art_value = 0.0;
  for (int i = 0; i < nr; ++i)
    if (t.basis[i] >= nv + nr) art_value += t.rhs[i];
  if (art_value > 1e-7) throw Error(Errc::infeasible, "constraints are inconsistent");

  LpSolution sol;
  sol.x.assign(nv, 0.0);
  for (int i = 0; i < nr; ++i)
    if (t.basis[i] < nv) sol.x[t.basis[i]] = t.rhs[i];
  sol.value = -t.obj_f;
  sol.iterations = iterations;
  return sol;
}

}  // namespace quasicut
