#include "ctxf/entanglement.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <ostream>
#include <set>
#include <string>

#include "ctxf/contextual_fraction.hpp"

namespace ctxf {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

BellScenario state_scenario(const PureState& psi) {
  SchmidtForm sf = schmidt_decompose(psi);
  BellScenario sc;
  sc.parties = {
      BellScenario::Party{{basis_pi8(), basis_5pi8()}, sf.u_a},
      BellScenario::Party{{basis_pi8(), basis_5pi8()}, sf.u_b},
  };
  return sc;
}

double distinguished_cf_at_theta(double theta) {
  auto sc = shared_bell_scenario(basis_x(), basis_y(), 2);
  return contextual_fraction(born_model(diag_state(theta, kPi / 4), sc)).cf;
}

DistinguishedResult distinguished_cf(const PureState& psi) {
  SchmidtForm sf = schmidt_decompose(psi);
  DistinguishedResult r;
  r.theta = sf.theta;
  r.entropy = diag_entropy(sf.theta);
  r.cf = distinguished_cf_at_theta(sf.theta);
  return r;
}

double threshold_entropy() {
  return 0.25 * (6.0 + std::sqrt(2.0) * std::log2(3.0 - 2.0 * std::sqrt(2.0)));
}

SweepGrid equatorial_sweep(const PureState& subject, int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("equatorial_sweep: grid_n < 2");
  SweepGrid g;
  g.axis0 = {"phi1", 0.0, 2 * kPi / grid_n, grid_n};
  g.axis1 = {"phi2", 0.0, 2 * kPi / grid_n, grid_n};
  g.cf.resize(std::size_t(grid_n) * grid_n);
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      auto sc = shared_bell_scenario({kPi / 2, g.axis0.value(i)},
                                     {kPi / 2, g.axis1.value(j)},
                                     subject.n_qubits);
      g.cf[std::size_t(i) * grid_n + j] =
          contextual_fraction(born_model(subject, sc)).cf;
    }
  }
  return g;
}

SweepGrid diagonal_sweep(int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("diagonal_sweep: grid_n < 2");
  SweepGrid g;
  g.axis0 = {"theta", 0.0, kPi / (grid_n - 1), grid_n};
  g.axis1 = {"phi", 0.0, 2 * kPi / grid_n, grid_n};
  g.cf.resize(std::size_t(grid_n) * grid_n);
  g.entropy.resize(g.cf.size());
  auto sc = shared_bell_scenario(basis_x(), basis_y(), 2);
  for (int i = 0; i < grid_n; ++i) {
    const double theta = g.axis0.value(i);
    for (int j = 0; j < grid_n; ++j) {
      const std::size_t k = std::size_t(i) * grid_n + j;
      g.entropy[k] = diag_entropy(theta);
      g.cf[k] =
          contextual_fraction(born_model(diag_state(theta, g.axis1.value(j)), sc))
              .cf;
    }
  }
  return g;
}

std::vector<ThetaCurvePoint> theta_curve(int points) {
  if (points < 2) throw std::invalid_argument("theta_curve: points < 2");
  std::vector<ThetaCurvePoint> curve(points);
  for (int k = 0; k < points; ++k) {
    const double theta = (kPi / 2) * k / (points - 1);
    curve[k] = {theta, diag_entropy(theta), distinguished_cf_at_theta(theta)};
  }
  return curve;
}

MonotonicityReport monotonicity_check(int samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("monotonicity_check: samples < 2");
  std::mt19937_64 rng(seed);
  MonotonicityReport rep{seed, samples, 0};
  for (int k = 0; k < samples; ++k) {
    auto psi = random_pure_state(2, rng);
    auto chi = random_pure_state(2, rng);
    auto a = distinguished_cf(psi);
    auto b = distinguished_cf(chi);
    if (a.entropy > b.entropy && a.cf < b.cf - 1e-6) ++rep.violations;
    if (b.entropy > a.entropy && b.cf < a.cf - 1e-6) ++rep.violations;
  }
  return rep;
}

double phase_rotation_equivalence(double theta, double varphi) {
  const double phi1 = 0.0;
  const double phi2 = kPi / 2;
  auto rotated = shared_bell_scenario({kPi / 2, phi1 + varphi},
                                      {kPi / 2, phi2 + varphi}, 2);
  auto fixed = shared_bell_scenario({kPi / 2, phi1}, {kPi / 2, phi2}, 2);
  // Advancing both azimuthal angles by varphi shifts the diagonal state's
  // relative phase by -2 varphi under the |theta,phi> sign convention.
  auto e1 = born_model(diag_state(theta, 0.0), rotated);
  auto e2 = born_model(diag_state(theta, -2 * varphi), fixed);
  double dev = 0.0;
  for (std::size_t c = 0; c < e1.rows.size(); ++c)
    for (std::size_t s = 0; s < e1.rows[c].size(); ++s)
      dev = std::max(dev, std::abs(e1.rows[c][s] - e2.rows[c][s]));
  return dev;
}

std::vector<std::pair<int, int>> local_maxima_cells(const SweepGrid& g,
                                                    double merge_tol) {
  const int n0 = g.axis0.count;
  const int n1 = g.axis1.count;
  const auto at = [&](int i, int j) {
    return g.cf[std::size_t((i + n0) % n0) * n1 + (j + n1) % n1];
  };

  // Union-find over near-equal adjacent cells (plateau merging).
  std::vector<int> parent(std::size_t(n0) * n1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j)
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (std::abs(at(i, j) - at(i + di, j + dj)) <= merge_tol)
            unite(i * n1 + j,
                  ((i + di + n0) % n0) * n1 + (j + dj + n1) % n1);
        }

  // A plateau is a maximum iff every neighbouring cell outside it is smaller.
  std::vector<char> is_max(parent.size(), 1);
  std::vector<int> peak(parent.size(), -1);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      const int root = find(i * n1 + j);
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int other =
              find(((i + di + n0) % n0) * n1 + (j + dj + n1) % n1);
          if (other != root && at(i + di, j + dj) > at(i, j))
            is_max[root] = 0;
        }
      if (peak[root] < 0 || at(i, j) > g.cf[std::size_t(peak[root])])
        peak[root] = i * n1 + j;
    }

  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < parent.size(); ++k)
    if (int(k) == find(int(k)) && is_max[k])
      out.emplace_back(peak[k] / n1, peak[k] % n1);
  return out;
}

std::vector<std::pair<int, int>> distinct_equatorial_maxima(
    const SweepGrid& g, double merge_tol) {
  auto maxima = local_maxima_cells(g, merge_tol);
  const int n0 = g.axis0.count;
  const int n1 = g.axis1.count;
  if (n0 % 2 != 0 || n1 % 2 != 0) return maxima;

  const int h0 = n0 / 2;
  const int h1 = n1 / 2;
  const auto at = [&](int i, int j) {
    return g.cf[std::size_t(i % n0) * n1 + j % n1];
  };
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j)
      if (std::abs(at(i, j) - at(i + h0, j)) > merge_tol ||
          std::abs(at(i, j) - at(i, j + h1)) > merge_tol)
        return maxima;  // data lacks the symmetry; nothing to fold

  std::set<std::pair<int, int>> folded;
  for (auto [i, j] : maxima) folded.insert({i % h0, j % h1});
  return {folded.begin(), folded.end()};
}

void write_equatorial_csv(std::ostream& os, const SweepGrid& g) {
  os << "phi1,phi2,cf\n";
  for (int i = 0; i < g.axis0.count; ++i)
    for (int j = 0; j < g.axis1.count; ++j)
      os << fmt(g.axis0.value(i)) << ',' << fmt(g.axis1.value(j)) << ','
         << fmt(g.cf_at(i, j)) << '\n';
}

void write_diagonal_csv(std::ostream& os, const SweepGrid& g) {
  os << "theta,phi,entropy,cf\n";
  for (int i = 0; i < g.axis0.count; ++i)
    for (int j = 0; j < g.axis1.count; ++j) {
      const std::size_t k = std::size_t(i) * g.axis1.count + j;
      os << fmt(g.axis0.value(i)) << ',' << fmt(g.axis1.value(j)) << ','
         << fmt(g.entropy[k]) << ',' << fmt(g.cf[k]) << '\n';
    }
}

void write_theta_curve_csv(std::ostream& os,
                           const std::vector<ThetaCurvePoint>& curve) {
  os << "theta,entropy,cf\n";
  for (const auto& p : curve)
    os << fmt(p.theta) << ',' << fmt(p.entropy) << ',' << fmt(p.cf) << '\n';
}

void write_monotonicity_csv(std::ostream& os, const MonotonicityReport& r) {
  os << "seed,samples,violations\n"
     << r.seed << ',' << r.samples << ',' << r.violations << '\n';
}

}  // namespace ctxf
