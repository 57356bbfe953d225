#include "ctxf/lp.hpp"

#include <stdexcept>

namespace ctxf {

LpSolution solve_lp(const LpProblem& p, std::int64_t max_iterations) {
  const std::size_t m = p.constraint_matrix.size();
  const std::size_t n = p.objective.size();
  if (p.bounds.size() != m)
    throw std::invalid_argument("solve_lp: bounds length != constraint rows");
  for (const auto& row : p.constraint_matrix)
    if (row.size() != n)
      throw std::invalid_argument("solve_lp: ragged constraint matrix");
  for (double b : p.bounds)
    if (b < 0.0) throw std::invalid_argument("solve_lp: negative bound");

  if (max_iterations <= 0)
    max_iterations = std::int64_t(64) * std::int64_t(n + m) + 4096;

  // Tableau over structural + slack variables; slack basis is feasible.
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = p.constraint_matrix[i][j];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = p.bounds[i];
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = p.objective[j];

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  LpSolution sol;
  while (true) {
    // Bland: entering = lowest-index column with positive reduced cost.
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t[m][j] > kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter == cols - 1) break;  // optimal

    // Ratio test; ties go to the smallest basis variable index.
    std::size_t leave = m;
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > kPivotTol) {
        double ratio = t[i][cols - 1] / t[i][enter];
        if (leave == m || ratio < best - kPivotTol ||
            (ratio < best + kPivotTol && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave == m)
      throw std::invalid_argument("solve_lp: unbounded problem");

    if (++sol.iterations > max_iterations) {
      sol.status = LpStatus::limit_exceeded;
      return sol;
    }

    const double pivot = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  sol.status = LpStatus::optimal;
  sol.optimum = -t[m][cols - 1];
  sol.solution.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) sol.solution[basis[i]] = t[i][cols - 1];
  return sol;
}

}  // namespace ctxf
