#include "ctxf/model_io.hpp"

#include <fstream>

#include <json.hpp>

namespace ctxf {

using nlohmann::json;

std::string model_to_json(const EmpiricalModel& e) {
  json j;
  j["measurements"] = e.scenario.measurements;
  j["outcome_arity"] = e.scenario.outcome_arity;
  j["contexts"] = e.scenario.contexts;
  j["rows"] = e.rows;
  return j.dump(2) + "\n";
}

EmpiricalModel model_from_json(const std::string& text) {
  json j = json::parse(text);
  EmpiricalModel e;
  e.scenario.measurements = j.at("measurements").get<std::vector<std::string>>();
  e.scenario.outcome_arity = j.at("outcome_arity").get<int>();
  e.scenario.contexts =
      j.at("contexts").get<std::vector<std::vector<std::string>>>();
  e.rows = j.at("rows").get<std::vector<std::vector<double>>>();
  return e;
}

EmpiricalModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return model_from_json(text);
  } catch (const json::exception& ex) {
    throw std::invalid_argument("bad model file " + path + ": " + ex.what());
  }
}

void save_model(const EmpiricalModel& e, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write model file: " + path);
  out << model_to_json(e);
}

std::string witness_to_json(const GlobalDistribution& d) {
  json j;
  j["measurements"] = d.scenario.measurements;
  j["outcome_arity"] = d.scenario.outcome_arity;
  j["weights"] = d.weights;
  j["total_mass"] = d.total_mass;
  return j.dump(2) + "\n";
}

void save_witness(const GlobalDistribution& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write witness file: " + path);
  out << witness_to_json(d);
}

}  // namespace ctxf
