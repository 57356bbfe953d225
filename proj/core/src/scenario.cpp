#include "ctxf/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ctxf {

JointOutcome outcome_from_index(std::size_t index, int length, int arity) {
  JointOutcome digits(length, 0);
  for (int p = length - 1; p >= 0; --p) {
    digits[p] = int(index % arity);
    index /= arity;
  }
  return digits;
}

std::size_t outcome_to_index(const JointOutcome& digits, int arity) {
  std::size_t idx = 0;
  for (int d : digits) idx = idx * arity + std::size_t(d);
  return idx;
}

int MeasurementScenario::index_of(const std::string& label) const {
  auto it = std::find(measurements.begin(), measurements.end(), label);
  if (it == measurements.end()) return -1;
  return int(it - measurements.begin());
}

std::vector<int> MeasurementScenario::context_indices(std::size_t context) const {
  if (context >= contexts.size())
    throw std::invalid_argument("context index out of range");
  std::vector<int> out;
  out.reserve(contexts[context].size());
  for (const auto& label : contexts[context]) {
    int i = index_of(label);
    if (i < 0) throw std::invalid_argument("context label not in X: " + label);
    out.push_back(i);
  }
  return out;
}

std::size_t MeasurementScenario::row_size(std::size_t context) const {
  if (context >= contexts.size())
    throw std::invalid_argument("context index out of range");
  std::size_t n = 1;
  for (std::size_t k = 0; k < contexts[context].size(); ++k)
    n *= std::size_t(outcome_arity);
  return n;
}

std::size_t MeasurementScenario::global_assignment_count() const {
  std::size_t n = 1;
  for (std::size_t k = 0; k < measurements.size(); ++k) {
    if (n > kGlobalAssignmentGuard / std::size_t(outcome_arity))
      throw ResourceLimitError("scenario exceeds the global-assignment guard");
    n *= std::size_t(outcome_arity);
  }
  if (n > kGlobalAssignmentGuard)
    throw ResourceLimitError("scenario exceeds the global-assignment guard");
  return n;
}

void check_scenario(const MeasurementScenario& sc) {
  if (sc.outcome_arity < 2)
    throw std::invalid_argument("outcome_arity must be >= 2");
  if (sc.contexts.empty())
    throw std::invalid_argument("contexts list is empty");
  std::set<std::string> seen(sc.measurements.begin(), sc.measurements.end());
  if (seen.size() != sc.measurements.size())
    throw std::invalid_argument("duplicate measurement label");
  std::set<std::string> covered;
  for (const auto& ctx : sc.contexts) {
    std::set<std::string> in_ctx;
    for (const auto& label : ctx) {
      if (!seen.count(label))
        throw std::invalid_argument("context label not in X: " + label);
      if (!in_ctx.insert(label).second)
        throw std::invalid_argument("duplicate label within context: " + label);
      covered.insert(label);
    }
  }
  if (covered.size() != sc.measurements.size())
    throw std::invalid_argument("some measurement appears in no context");
}

std::vector<std::string> validate_model(const EmpiricalModel& e) {
  std::vector<std::string> violations;
  try {
    check_scenario(e.scenario);
  } catch (const std::invalid_argument& ex) {
    violations.push_back(std::string("scenario: ") + ex.what());
    return violations;
  }
  if (e.rows.size() != e.scenario.contexts.size()) {
    violations.push_back("row count does not match context count");
    return violations;
  }
  for (std::size_t c = 0; c < e.rows.size(); ++c) {
    const auto& row = e.rows[c];
    std::string where = "context " + std::to_string(c) + ": ";
    if (row.size() != e.scenario.row_size(c)) {
      violations.push_back(where + "row length != arity^|context|");
      continue;
    }
    double sum = 0.0;
    bool negative = false;
    for (double p : row) {
      if (p < -kProbTol) negative = true;
      sum += p;
    }
    if (negative) violations.push_back(where + "negative probability");
    if (std::abs(sum - 1.0) > kProbTol)
      violations.push_back(where + "row does not sum to 1");
  }
  return violations;
}

std::vector<double> marginalize(const GlobalDistribution& d, std::size_t context) {
  const auto& sc = d.scenario;
  const auto idx = sc.context_indices(context);
  const std::size_t n_global = sc.global_assignment_count();
  if (d.weights.size() != n_global)
    throw std::invalid_argument("weight vector length != arity^|X|");

  // Place value of each context measurement within a global index.
  const int nx = int(sc.measurements.size());
  std::vector<std::size_t> place(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    std::size_t p = 1;
    for (int q = 0; q < nx - 1 - idx[k]; ++q) p *= std::size_t(sc.outcome_arity);
    place[k] = p;
  }

  std::vector<double> out(sc.row_size(context), 0.0);
  for (std::size_t g = 0; g < n_global; ++g) {
    std::size_t s = 0;
    for (std::size_t k = 0; k < idx.size(); ++k)
      s = s * std::size_t(sc.outcome_arity) +
          (g / place[k]) % std::size_t(sc.outcome_arity);
    out[s] += d.weights[g];
  }
  return out;
}

EmpiricalModel mix_models(const EmpiricalModel& e1, const EmpiricalModel& e2,
                          double lambda) {
  if (!(e1.scenario == e2.scenario))
    throw std::invalid_argument("mix_models: scenario mismatch");
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("mix_models: lambda outside [0,1]");
  EmpiricalModel out;
  out.scenario = e1.scenario;
  out.rows.resize(e1.rows.size());
  for (std::size_t c = 0; c < e1.rows.size(); ++c) {
    if (e1.rows[c].size() != e2.rows[c].size())
      throw std::invalid_argument("mix_models: row length mismatch");
    out.rows[c].resize(e1.rows[c].size());
    for (std::size_t s = 0; s < e1.rows[c].size(); ++s)
      out.rows[c][s] = lambda * e1.rows[c][s] + (1.0 - lambda) * e2.rows[c][s];
  }
  return out;
}

EmpiricalModel fixture_model(const std::string& name) {
  MeasurementScenario sc;
  sc.measurements = {"a1", "a2", "b"};
  sc.contexts = {{"a1", "b"}, {"a2", "b"}};
  sc.outcome_arity = 2;

  EmpiricalModel e;
  e.scenario = sc;
  if (name == "table1a") {
    e.rows = {{1, 0, 0, 0}, {1, 0, 0, 0}};
  } else if (name == "table1b") {
    e.rows = {{1, 0, 0, 0}, {0, 0, 0, 1}};
  } else if (name == "table1c") {
    e.rows = {{1, 0, 0, 0}, {0.5, 0, 0, 0.5}};
  } else {
    throw std::invalid_argument("unknown fixture: " + name);
  }
  return e;
}

}  // namespace ctxf
