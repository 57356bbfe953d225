#pragma once

#include <optional>

#include "ctxf/lp.hpp"
#include "ctxf/scenario.hpp"

namespace ctxf {

struct CfResult {
  double cf = 0.0;
  double ncf = 1.0;
  // Optimal sub-normalised global distribution; total_mass == ncf.
  GlobalDistribution witness;
  // Present when ncf > 0: witness renormalised and marginalised per context.
  std::optional<EmpiricalModel> noncontextual_part;
  // Present when cf > 0: (e - marginals(witness)) / cf.
  std::optional<EmpiricalModel> residual_part;
};

// One variable per global assignment, all-ones objective, one <= constraint
// per (context, joint outcome) pair. The optimum is NCF(e).
LpProblem build_cf_lp(const EmpiricalModel& e);

CfResult contextual_fraction(const EmpiricalModel& e);

bool is_noncontextual(const EmpiricalModel& e, double tol = 1e-6);

}  // namespace ctxf
