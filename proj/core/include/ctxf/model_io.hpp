#pragma once

#include <string>

#include "ctxf/scenario.hpp"

namespace ctxf {

// Empirical-model JSON: keys "measurements", "outcome_arity", "contexts",
// "rows" (rows aligned with contexts, canonical outcome order).
std::string model_to_json(const EmpiricalModel& e);
EmpiricalModel model_from_json(const std::string& text);

EmpiricalModel load_model(const std::string& path);
void save_model(const EmpiricalModel& e, const std::string& path);

// Witness JSON: "measurements", "outcome_arity", "weights", "total_mass".
std::string witness_to_json(const GlobalDistribution& d);
void save_witness(const GlobalDistribution& d, const std::string& path);

}  // namespace ctxf
