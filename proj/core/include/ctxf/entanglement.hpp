#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ctxf/states.hpp"

namespace ctxf {

struct DistinguishedResult {
  double theta = 0.0;    // Schmidt parameter, [0, pi/2]
  double entropy = 0.0;  // entanglement entropy at theta
  double cf = 0.0;
};

struct SweepAxis {
  std::string name;
  double start = 0.0;
  double step = 0.0;
  int count = 0;

  double value(int i) const { return start + step * i; }
};

/// Row-major grid of cf values (axis0 = rows), with an optional entropy
/// layer for the diagonal-state sweep.
struct SweepGrid {
  SweepAxis axis0;
  SweepAxis axis1;
  std::vector<double> cf;
  std::vector<double> entropy;  // empty unless the sweep produces it

  double cf_at(int i, int j) const { return cf[std::size_t(i) * axis1.count + j]; }
};

// The state-dependent scenario S_psi: both parties measure
// {B(pi/2,pi/8), B(pi/2,5pi/8)} rotated by the state's Schmidt unitaries.
BellScenario state_scenario(const PureState& psi);

// Distinguished contextual fraction of a 2-qubit state: extract theta via
// Schmidt decomposition, then take the cf of |diag; theta, pi/4> with
// respect to S(B_x, B_y).
DistinguishedResult distinguished_cf(const PureState& psi);
double distinguished_cf_at_theta(double theta);

// (1/4)[6 + sqrt(2) log2(3 - 2 sqrt(2))], the entanglement entropy of
// |diag; pi/4, phi>; cf vanishes below this entropy level.
double threshold_entropy();

// cf of `subject` under S(B(pi/2,phi1), B(pi/2,phi2)) on a uniform
// grid_n x grid_n grid over [0,2pi)^2.
SweepGrid equatorial_sweep(const PureState& subject, int grid_n);

// entropy and cf of |diag; theta, phi> under S(B_x,B_y) for theta in [0,pi]
// (inclusive) and phi in [0,2pi).
SweepGrid diagonal_sweep(int grid_n);

struct ThetaCurvePoint {
  double theta = 0.0;
  double entropy = 0.0;
  double cf = 0.0;
};

// distinguished cf along theta in [0, pi/2], `points` uniform samples.
std::vector<ThetaCurvePoint> theta_curve(int points);

struct MonotonicityReport {
  std::uint64_t seed = 0;
  int samples = 0;
  int violations = 0;
};

// Random 2-qubit state pairs; counts pairs where higher entropy fails to
// give a cf at least as large (tolerance 1e-6).
MonotonicityReport monotonicity_check(int samples, std::uint64_t seed);

// Max entrywise deviation between the model of |diag; theta, 0> under the
// varphi-rotated equatorial pair (phi1,phi2)=(0,pi/2) and the model of
// |diag; theta, -2 varphi> under the unrotated pair. The rotated model's
// contextual fraction still equals that of |diag; theta, 2 varphi>: the
// two phases differ only by relabelling the outcomes of the second basis.
double phase_rotation_equivalence(double theta, double varphi);

// Strict local maxima on the doubly-periodic grid, adjacent near-equal
// cells (within merge_tol) merged into one plateau. Returns one peak cell
// (i,j) per maximal plateau.
std::vector<std::pair<int, int>> local_maxima_cells(const SweepGrid& g,
                                                    double merge_tol = 1e-6);

// Maxima of an equatorial sweep counted up to the half-period symmetry:
// B(pi/2, phi+pi) is B(pi/2, phi) with its outcomes swapped, so the cf
// landscape over [0,2pi)^2 tiles a pi x pi fundamental domain four times.
// Folds local_maxima_cells accordingly when the grid is even-sized and the
// data actually has the symmetry (within merge_tol); otherwise returns the
// unfolded maxima.
std::vector<std::pair<int, int>> distinct_equatorial_maxima(
    const SweepGrid& g, double merge_tol = 1e-6);

void write_equatorial_csv(std::ostream& os, const SweepGrid& g);
void write_diagonal_csv(std::ostream& os, const SweepGrid& g);
void write_theta_curve_csv(std::ostream& os,
                           const std::vector<ThetaCurvePoint>& curve);
void write_monotonicity_csv(std::ostream& os, const MonotonicityReport& r);

}  // namespace ctxf
