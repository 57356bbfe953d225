#pragma once

#include <cstdint>
#include <vector>

namespace ctxf {

/// maximise c'x  subject to  Ax <= b, x >= 0, with b >= 0.
struct LpProblem {
  std::vector<double> objective;
  std::vector<std::vector<double>> constraint_matrix;
  std::vector<double> bounds;
};

enum class LpStatus { optimal, infeasible, limit_exceeded };

struct LpSolution {
  double optimum = 0.0;
  std::vector<double> solution;
  LpStatus status = LpStatus::optimal;
  std::int64_t iterations = 0;
};

inline constexpr double kPivotTol = 1e-10;

// Dense primal simplex with Bland's anti-cycling rule. b >= 0 makes the
// all-slack basis feasible, so the result is never `infeasible` here.
// max_iterations <= 0 picks a default proportional to the problem size.
LpSolution solve_lp(const LpProblem& p, std::int64_t max_iterations = 0);

}  // namespace ctxf
