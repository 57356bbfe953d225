#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctxf {

// Thrown when an instance exceeds a hard resource guard (global-assignment
// blow-up, solver iteration limit). The CLI maps this to exit code 2.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kProbTol = 1e-9;
inline constexpr std::size_t kGlobalAssignmentGuard = std::size_t{1} << 20;

/// A joint outcome: one digit in [0, arity) per measurement, aligned with a
/// context's (or X's) measurement order, first measurement most significant.
using JointOutcome = std::vector<int>;

JointOutcome outcome_from_index(std::size_t index, int length, int arity);
std::size_t outcome_to_index(const JointOutcome& digits, int arity);

/// The triple (X, M, O): measurement labels, contexts (ordered sublists of
/// X), and a fixed outcome arity shared by all measurements.
struct MeasurementScenario {
  std::vector<std::string> measurements;
  std::vector<std::vector<std::string>> contexts;
  int outcome_arity = 2;

  int index_of(const std::string& label) const;
  std::vector<int> context_indices(std::size_t context) const;
  std::size_t row_size(std::size_t context) const;
  // arity^|X|; throws ResourceLimitError past the guard.
  std::size_t global_assignment_count() const;

  bool operator==(const MeasurementScenario&) const = default;
};

// Throws std::invalid_argument on the first structural invariant breach.
void check_scenario(const MeasurementScenario& sc);

/// One probability distribution per context, rows in canonical lexicographic
/// outcome order.
struct EmpiricalModel {
  MeasurementScenario scenario;
  std::vector<std::vector<double>> rows;
};

/// A (possibly sub-normalised) distribution over all global assignments O^X.
struct GlobalDistribution {
  MeasurementScenario scenario;
  std::vector<double> weights;
  double total_mass = 0.0;
};

// Diagnostics only: empty means every model invariant holds. Each entry
// names the offending context index and the failed check.
std::vector<std::string> validate_model(const EmpiricalModel& e);

// Sum of d's weights over all global assignments agreeing with each joint
// outcome of the given context; output sums to d.total_mass.
std::vector<double> marginalize(const GlobalDistribution& d, std::size_t context);

EmpiricalModel mix_models(const EmpiricalModel& e1, const EmpiricalModel& e2,
                          double lambda);

// "table1a" | "table1b" | "table1c" on X={a1,a2,b}, M={{a1,b},{a2,b}}.
EmpiricalModel fixture_model(const std::string& name);

}  // namespace ctxf
