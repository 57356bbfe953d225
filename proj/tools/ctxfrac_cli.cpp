// Command-line front end: contextual fractions of empirical models, Born
// models of qubit states, Schmidt/entropy utilities, and the sweep/curve
// reproductions. CSV and JSON go to --out; summaries go to stdout.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ctxf/contextual_fraction.hpp"
#include "ctxf/entanglement.hpp"
#include "ctxf/model_io.hpp"
#include "ctxf/parse.hpp"

namespace {

using namespace ctxf;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write: " + path);
  out << text;
}

std::string num(double x, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

void print_cf(const CfResult& r) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%g", r.cf);
  std::cout << "CF = " << buf << "\n";
  std::snprintf(buf, sizeof buf, "%g", r.ncf);
  std::cout << "NCF = " << buf << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"contextual-fraction toolkit"};
  app.require_subcommand(1);

  std::string model_path, state_spec, scenario_spec, out_path, witness_path;
  double tol = 1e-6;
  int grid = 64;
  int points = 201;
  int samples = 1000;
  std::uint64_t seed = 42;

  auto* cmd_cf = app.add_subcommand("cf", "contextual fraction of a model");
  cmd_cf->add_option("--model", model_path, "empirical-model JSON")->required();
  cmd_cf->add_option("--witness", witness_path, "write optimal witness JSON");
  cmd_cf->add_option("--tol", tol, "noncontextuality tolerance");
  cmd_cf->add_option("--out", out_path, "write {cf, ncf} JSON");

  auto* cmd_born = app.add_subcommand("born", "Born-rule model of a state");
  cmd_born->add_option("--state", state_spec)->required();
  cmd_born->add_option("--scenario", scenario_spec)->required();
  cmd_born->add_option("--out", out_path, "write model JSON");

  auto* cmd_schmidt = app.add_subcommand("schmidt", "Schmidt decomposition");
  cmd_schmidt->add_option("--state", state_spec)->required();
  cmd_schmidt->add_option("--out", out_path, "write JSON");

  auto* cmd_entropy = app.add_subcommand("entropy", "entanglement entropy");
  cmd_entropy->add_option("--state", state_spec)->required();

  auto* cmd_dcf =
      app.add_subcommand("distinguished-cf", "cf via the state scenario");
  cmd_dcf->add_option("--state", state_spec)->required();
  cmd_dcf->add_option("--out", out_path, "write JSON");

  auto* cmd_eq = app.add_subcommand("sweep-equatorial",
                                    "cf over equatorial basis pairs");
  cmd_eq->add_option("--state", state_spec, "subject state (default ghz:2)");
  cmd_eq->add_option("--grid", grid);
  cmd_eq->add_option("--out", out_path, "write CSV");

  auto* cmd_diag =
      app.add_subcommand("sweep-diagonal", "entropy and cf of diagonal states");
  cmd_diag->add_option("--grid", grid);
  cmd_diag->add_option("--out", out_path, "write CSV");

  auto* cmd_curve = app.add_subcommand("curve-theta", "distinguished cf curve");
  cmd_curve->add_option("--points", points);
  cmd_curve->add_option("--out", out_path, "write CSV");

  auto* cmd_thr = app.add_subcommand("threshold", "entropy threshold");

  auto* cmd_mono = app.add_subcommand("monotonicity",
                                      "cf-vs-entropy monotonicity check");
  cmd_mono->add_option("--samples", samples);
  cmd_mono->add_option("--seed", seed);
  cmd_mono->add_option("--out", out_path, "write CSV");

  auto* cmd_fix = app.add_subcommand("fixtures", "emit the bundled fixture models");
  cmd_fix->add_option("--out", out_path, "output directory (default .)");

  CLI11_PARSE(app, argc, argv);

  if (cmd_cf->parsed()) {
    auto e = load_model(model_path);
    auto violations = validate_model(e);
    if (!violations.empty()) {
      for (const auto& v : violations) std::cerr << "invalid model: " << v << "\n";
      return 1;
    }
    auto r = contextual_fraction(e);
    print_cf(r);
    std::cout << "noncontextual (tol " << tol << "): "
              << (r.cf <= tol ? "yes" : "no") << "\n";
    if (!witness_path.empty()) save_witness(r.witness, witness_path);
    if (!out_path.empty()) {
      std::ostringstream os;
      os << "{\n  \"cf\": " << r.cf << ",\n  \"ncf\": " << r.ncf << "\n}\n";
      write_text(out_path, os.str());
    }
  } else if (cmd_born->parsed()) {
    auto psi = parse_state(state_spec);
    auto sc = parse_scenario(scenario_spec, psi.n_qubits);
    auto e = born_model(psi, sc);
    std::cout << "model: " << e.scenario.measurements.size()
              << " measurements, " << e.scenario.contexts.size()
              << " contexts\n";
    if (!out_path.empty()) save_model(e, out_path);
  } else if (cmd_schmidt->parsed()) {
    auto psi = parse_state(state_spec);
    auto sf = schmidt_decompose(psi);
    std::cout << "theta = " << num(sf.theta) << "\n";
    for (auto [name, u] : {std::pair{"u_a", sf.u_a}, std::pair{"u_b", sf.u_b}}) {
      std::cout << name;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          std::cout << (i == 0 && j == 0 ? " = " : " ") << "("
                    << num(u[i][j].real()) << "," << num(u[i][j].imag()) << ")";
      std::cout << "\n";
    }
    if (!out_path.empty()) {
      std::ostringstream os;
      os << "{\n  \"theta\": " << sf.theta << ",\n  \"u_a\": [";
      auto dump = [&os](const Mat2& u) {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            os << (i + j ? ", " : "") << "[" << u[i][j].real() << ", "
               << u[i][j].imag() << "]";
      };
      dump(sf.u_a);
      os << "],\n  \"u_b\": [";
      dump(sf.u_b);
      os << "]\n}\n";
      write_text(out_path, os.str());
    }
  } else if (cmd_entropy->parsed()) {
    auto psi = parse_state(state_spec);
    std::cout << "entropy = " << num(entanglement_entropy(psi)) << "\n";
  } else if (cmd_dcf->parsed()) {
    auto psi = parse_state(state_spec);
    auto r = distinguished_cf(psi);
    std::cout << "theta = " << num(r.theta) << "\n"
              << "entropy = " << num(r.entropy) << "\n"
              << "cf = " << num(r.cf) << "\n";
    if (!out_path.empty()) {
      std::ostringstream os;
      os << "{\n  \"theta\": " << r.theta << ",\n  \"entropy\": " << r.entropy
         << ",\n  \"cf\": " << r.cf << "\n}\n";
      write_text(out_path, os.str());
    }
  } else if (cmd_eq->parsed()) {
    auto psi = state_spec.empty() ? ghz_state(2) : parse_state(state_spec);
    auto g = equatorial_sweep(psi, grid);
    auto maxima = local_maxima_cells(g);
    std::cout << "grid " << grid << "x" << grid << ", " << maxima.size()
              << " local maxima\n";
    if (!out_path.empty()) {
      std::ostringstream os;
      write_equatorial_csv(os, g);
      write_text(out_path, os.str());
    }
  } else if (cmd_diag->parsed()) {
    auto g = diagonal_sweep(grid);
    double max_cf = 0.0;
    for (double v : g.cf) max_cf = std::max(max_cf, v);
    std::cout << "grid " << grid << "x" << grid << ", max cf = " << num(max_cf)
              << "\n";
    if (!out_path.empty()) {
      std::ostringstream os;
      write_diagonal_csv(os, g);
      write_text(out_path, os.str());
    }
  } else if (cmd_curve->parsed()) {
    auto curve = theta_curve(points);
    std::cout << points << " points, cf(pi/2) = " << num(curve.back().cf)
              << "\n";
    if (!out_path.empty()) {
      std::ostringstream os;
      write_theta_curve_csv(os, curve);
      write_text(out_path, os.str());
    }
  } else if (cmd_thr->parsed()) {
    std::cout << num(threshold_entropy()) << "\n";
  } else if (cmd_mono->parsed()) {
    auto rep = monotonicity_check(samples, seed);
    std::cout << "samples = " << rep.samples << ", violations = "
              << rep.violations << "\n";
    if (!out_path.empty()) {
      std::ostringstream os;
      write_monotonicity_csv(os, rep);
      write_text(out_path, os.str());
    }
  } else if (cmd_fix->parsed()) {
    std::filesystem::path dir = out_path.empty() ? "." : out_path;
    std::filesystem::create_directories(dir);
    for (const char* name : {"table1a", "table1b", "table1c"}) {
      auto path = dir / (std::string(name) + ".json");
      save_model(fixture_model(name), path.string());
      std::cout << path.string() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ctxf::ResourceLimitError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
