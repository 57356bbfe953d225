#include "ctxf/contextual_fraction.hpp"

#include <algorithm>
#include <cmath>

namespace ctxf {

LpProblem build_cf_lp(const EmpiricalModel& e) {
  const auto& sc = e.scenario;
  const std::size_t n_global = sc.global_assignment_count();
  const int arity = sc.outcome_arity;
  const int nx = int(sc.measurements.size());

  LpProblem p;
  p.objective.assign(n_global, 1.0);

  for (std::size_t c = 0; c < sc.contexts.size(); ++c) {
    const auto idx = sc.context_indices(c);
    std::vector<std::size_t> place(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      std::size_t pw = 1;
      for (int q = 0; q < nx - 1 - idx[k]; ++q) pw *= std::size_t(arity);
      place[k] = pw;
    }
    const std::size_t n_out = sc.row_size(c);
    std::vector<std::vector<double>> rows(n_out,
                                          std::vector<double>(n_global, 0.0));
    for (std::size_t g = 0; g < n_global; ++g) {
      std::size_t s = 0;
      for (std::size_t k = 0; k < idx.size(); ++k)
        s = s * std::size_t(arity) + (g / place[k]) % std::size_t(arity);
      rows[s][g] = 1.0;
    }
    for (std::size_t s = 0; s < n_out; ++s) {
      p.constraint_matrix.push_back(std::move(rows[s]));
      p.bounds.push_back(std::max(0.0, e.rows[c][s]));
    }
  }
  return p;
}

CfResult contextual_fraction(const EmpiricalModel& e) {
  LpProblem p = build_cf_lp(e);
  LpSolution sol = solve_lp(p);
  if (sol.status == LpStatus::limit_exceeded)
    throw ResourceLimitError("contextual_fraction: simplex iteration limit");

  CfResult r;
  r.ncf = std::clamp(sol.optimum, 0.0, 1.0);
  r.cf = 1.0 - r.ncf;

  r.witness.scenario = e.scenario;
  r.witness.weights = std::move(sol.solution);
  double mass = 0.0;
  for (double& w : r.witness.weights) {
    if (w < 0.0 && w > -1e-9) w = 0.0;
    mass += w;
  }
  r.witness.total_mass = mass;

  if (r.ncf > 1e-9) {
    EmpiricalModel nc;
    nc.scenario = e.scenario;
    for (std::size_t c = 0; c < e.scenario.contexts.size(); ++c) {
      auto row = marginalize(r.witness, c);
      for (double& x : row) x /= r.ncf;
      nc.rows.push_back(std::move(row));
    }
    r.noncontextual_part = std::move(nc);
  }
  if (r.cf > 1e-9) {
    EmpiricalModel res;
    res.scenario = e.scenario;
    for (std::size_t c = 0; c < e.scenario.contexts.size(); ++c) {
      auto wrow = marginalize(r.witness, c);
      std::vector<double> row(wrow.size());
      for (std::size_t s = 0; s < row.size(); ++s)
        row[s] = (e.rows[c][s] - wrow[s]) / r.cf;
      res.rows.push_back(std::move(row));
    }
    r.residual_part = std::move(res);
  }
  return r;
}

bool is_noncontextual(const EmpiricalModel& e, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("is_noncontextual: tol must be > 0");
  return contextual_fraction(e).cf <= tol;
}

}  // namespace ctxf
