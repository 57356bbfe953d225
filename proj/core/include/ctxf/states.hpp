#pragma once

#include <array>
#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "ctxf/scenario.hpp"

namespace ctxf {

using Complex = std::complex<double>;
using Ket2 = std::array<Complex, 2>;
using Mat2 = std::array<std::array<Complex, 2>, 2>;

Mat2 mat2_identity();
Mat2 mat2_adjoint(const Mat2& m);
Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Ket2 mat2_apply(const Mat2& m, const Ket2& v);
// Max deviation of m'm from the identity.
double unitarity_defect(const Mat2& m);

/// The ONB B(theta,phi) = { |theta,phi>, |pi-theta, pi+phi> }.
struct BlochBasis {
  double theta = 0.0;
  double phi = 0.0;
  Ket2 ket(int outcome) const;
};

BlochBasis basis_x();      // B(pi/2, 0)
BlochBasis basis_y();      // B(pi/2, pi/2)
BlochBasis basis_z();      // B(0, 0)
BlochBasis basis_pi8();    // B(pi/2, pi/8)
BlochBasis basis_5pi8();   // B(pi/2, 5pi/8)

/// Unit-norm amplitude vector over n qubits; qubit 0 (Alice) is the most
/// significant index.
struct PureState {
  int n_qubits = 1;
  std::vector<Complex> amplitudes;
};

PureState bloch_ket(double theta, double phi);
// cos(theta/2)|00> + e^{i phi} sin(theta/2)|11>
PureState diag_state(double theta, double phi);
PureState ghz_state(int n);
// Normalises an arbitrary nonzero amplitude vector (length must be 2^n).
PureState pure_state_from_amplitudes(std::vector<Complex> amps);
PureState tensor(const PureState& a, const PureState& b);
PureState apply_local_unitaries(const PureState& psi, const Mat2& u_a,
                                const Mat2& u_b);
// |<a|b>|; 1 means equal up to global phase.
double overlap_modulus(const PureState& a, const PureState& b);
// Amplitudes i.i.d. standard complex normal, then normalised.
PureState random_pure_state(int n, std::mt19937_64& rng);
Mat2 random_unitary2(std::mt19937_64& rng);

/// (n,2,2) Bell scenario: each party holds two ONBs, optionally rotated by a
/// local unitary. Measurement labels are a1,a2,b1,b2,...; contexts enumerate
/// basis choices with party 0 as the most significant bit.
struct BellScenario {
  struct Party {
    std::array<BlochBasis, 2> bases;
    std::optional<Mat2> rotation;
  };
  std::vector<Party> parties;

  MeasurementScenario scenario() const;
  Ket2 measurement_ket(std::size_t party, int choice, int outcome) const;
};

// All parties share the pair {b1, b2}.
BellScenario shared_bell_scenario(const BlochBasis& b1, const BlochBasis& b2,
                                  int n_parties);

EmpiricalModel born_model(const PureState& psi, const BellScenario& sc);

/// theta in [0, pi/2] plus local unitaries with
/// (u_a (x) u_b) |diag; theta, 0> = |psi> up to global phase.
struct SchmidtForm {
  double theta = 0.0;
  Mat2 u_a;
  Mat2 u_b;
};

SchmidtForm schmidt_decompose(const PureState& psi);

/// 2x2 Hermitian PSD unit-trace matrix.
struct DensityMatrix2 {
  Mat2 m;
  std::array<double, 2> eigenvalues() const;  // descending
};

// Partial trace over the second qubit in the computational basis.
DensityMatrix2 reduced_density(const PureState& psi);

// Von Neumann entropy (base 2) of the reduced state; in [0, 1].
double entanglement_entropy(const PureState& psi);
// Closed form for |diag; theta, phi> (independent of phi).
double diag_entropy(double theta);

// Product global distribution whose marginals reproduce the Born model of
// the product state exactly.
GlobalDistribution separable_witness(const std::vector<PureState>& factors,
                                     const BellScenario& sc);

}  // namespace ctxf
