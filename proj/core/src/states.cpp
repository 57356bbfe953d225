#include "ctxf/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ctxf {

namespace {
constexpr double kPi = std::numbers::pi;
}

Mat2 mat2_identity() {
  return Mat2{{{Complex(1, 0), Complex(0, 0)}, {Complex(0, 0), Complex(1, 0)}}};
}

Mat2 mat2_adjoint(const Mat2& m) {
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = std::conj(m[j][i]);
  return out;
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return out;
}

Ket2 mat2_apply(const Mat2& m, const Ket2& v) {
  return Ket2{m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

double unitarity_defect(const Mat2& m) {
  Mat2 p = mat2_mul(mat2_adjoint(m), m);
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      d = std::max(d, std::abs(p[i][j] - (i == j ? Complex(1, 0) : Complex(0, 0))));
  return d;
}

Ket2 BlochBasis::ket(int outcome) const {
  if (outcome == 0)
    return Ket2{std::cos(theta / 2),
                std::polar(std::sin(theta / 2), phi)};
  // antipode |pi - theta, pi + phi>
  return Ket2{std::sin(theta / 2),
              -std::polar(std::cos(theta / 2), phi)};
}

BlochBasis basis_x() { return {kPi / 2, 0.0}; }
BlochBasis basis_y() { return {kPi / 2, kPi / 2}; }
BlochBasis basis_z() { return {0.0, 0.0}; }
BlochBasis basis_pi8() { return {kPi / 2, kPi / 8}; }
BlochBasis basis_5pi8() { return {kPi / 2, 5 * kPi / 8}; }

PureState bloch_ket(double theta, double phi) {
  if (theta < 0.0 || theta > kPi)
    throw std::invalid_argument("bloch_ket: theta outside [0, pi]");
  if (phi < 0.0 || phi >= 2 * kPi)
    throw std::invalid_argument("bloch_ket: phi outside [0, 2pi)");
  BlochBasis b{theta, phi};
  auto k = b.ket(0);
  return PureState{1, {k[0], k[1]}};
}

PureState diag_state(double theta, double phi) {
  if (theta < 0.0 || theta > kPi)
    throw std::invalid_argument("diag_state: theta outside [0, pi]");
  PureState psi{2, std::vector<Complex>(4, Complex(0, 0))};
  psi.amplitudes[0] = std::cos(theta / 2);
  psi.amplitudes[3] = std::polar(std::sin(theta / 2), phi);
  return psi;
}

PureState ghz_state(int n) {
  if (n < 2) throw std::invalid_argument("ghz_state: n must be >= 2");
  std::size_t dim = std::size_t{1} << n;
  PureState psi{n, std::vector<Complex>(dim, Complex(0, 0))};
  const double r = 1.0 / std::sqrt(2.0);
  psi.amplitudes.front() = r;
  psi.amplitudes.back() = r;
  return psi;
}

PureState pure_state_from_amplitudes(std::vector<Complex> amps) {
  std::size_t dim = amps.size();
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if (dim < 2 || (std::size_t{1} << n) != dim)
    throw std::invalid_argument("amplitude vector length must be a power of 2");
  double norm2 = 0.0;
  for (const auto& a : amps) norm2 += std::norm(a);
  if (norm2 <= 0.0)
    throw std::invalid_argument("amplitude vector must be nonzero");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= inv;
  return PureState{n, std::move(amps)};
}

PureState tensor(const PureState& a, const PureState& b) {
  PureState out{a.n_qubits + b.n_qubits,
                std::vector<Complex>(a.amplitudes.size() * b.amplitudes.size())};
  std::size_t k = 0;
  for (const auto& x : a.amplitudes)
    for (const auto& y : b.amplitudes) out.amplitudes[k++] = x * y;
  return out;
}

PureState apply_local_unitaries(const PureState& psi, const Mat2& u_a,
                                const Mat2& u_b) {
  if (psi.n_qubits != 2)
    throw std::invalid_argument("apply_local_unitaries: need a 2-qubit state");
  PureState out{2, std::vector<Complex>(4, Complex(0, 0))};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out.amplitudes[2 * i + j] +=
              u_a[i][k] * u_b[j][l] * psi.amplitudes[2 * k + l];
  return out;
}

double overlap_modulus(const PureState& a, const PureState& b) {
  if (a.amplitudes.size() != b.amplitudes.size())
    throw std::invalid_argument("overlap_modulus: dimension mismatch");
  Complex ip(0, 0);
  for (std::size_t k = 0; k < a.amplitudes.size(); ++k)
    ip += std::conj(a.amplitudes[k]) * b.amplitudes[k];
  return std::abs(ip);
}

PureState random_pure_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(std::size_t{1} << n);
  for (auto& a : amps) {
    double re = gauss(rng);
    double im = gauss(rng);
    a = Complex(re, im);
  }
  return pure_state_from_amplitudes(std::move(amps));
}

Mat2 random_unitary2(std::mt19937_64& rng) {
  // Gram-Schmidt on two Gaussian columns.
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&] { double re = gauss(rng); double im = gauss(rng); return Complex(re, im); };
  Ket2 c0{draw(), draw()};
  double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
  c0 = {c0[0] / n0, c0[1] / n0};
  Ket2 c1{draw(), draw()};
  Complex ov = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
  c1 = {c1[0] - ov * c0[0], c1[1] - ov * c0[1]};
  double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
  c1 = {c1[0] / n1, c1[1] / n1};
  return Mat2{{{c0[0], c1[0]}, {c0[1], c1[1]}}};
}

MeasurementScenario BellScenario::scenario() const {
  const int n = int(parties.size());
  if (n < 2) throw std::invalid_argument("BellScenario: need >= 2 parties");
  if (n > 26) throw std::invalid_argument("BellScenario: too many parties");
  MeasurementScenario sc;
  sc.outcome_arity = 2;
  for (int i = 0; i < n; ++i) {
    std::string letter(1, char('a' + i));
    sc.measurements.push_back(letter + "1");
    sc.measurements.push_back(letter + "2");
  }
  // Context index bit for party i: (c >> (n-1-i)) & 1, party 0 most significant.
  for (std::size_t c = 0; c < (std::size_t{1} << n); ++c) {
    std::vector<std::string> ctx;
    for (int i = 0; i < n; ++i) {
      int choice = int((c >> (n - 1 - i)) & 1);
      std::string letter(1, char('a' + i));
      ctx.push_back(letter + (choice == 0 ? "1" : "2"));
    }
    sc.contexts.push_back(std::move(ctx));
  }
  return sc;
}

Ket2 BellScenario::measurement_ket(std::size_t party, int choice,
                                   int outcome) const {
  Ket2 k = parties.at(party).bases.at(choice).ket(outcome);
  if (parties[party].rotation) k = mat2_apply(*parties[party].rotation, k);
  return k;
}

BellScenario shared_bell_scenario(const BlochBasis& b1, const BlochBasis& b2,
                                  int n_parties) {
  BellScenario sc;
  sc.parties.assign(std::size_t(n_parties),
                    BellScenario::Party{{b1, b2}, std::nullopt});
  return sc;
}

EmpiricalModel born_model(const PureState& psi, const BellScenario& bs) {
  const int n = int(bs.parties.size());
  if (psi.n_qubits != n)
    throw std::invalid_argument("born_model: state/scenario party mismatch");
  EmpiricalModel e;
  e.scenario = bs.scenario();

  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t c = 0; c < (std::size_t{1} << n); ++c) {
    std::vector<double> row(dim, 0.0);
    for (std::size_t s = 0; s < dim; ++s) {
      // v = tensor of outcome kets; probability |<v|psi>|^2
      std::vector<Complex> v{Complex(1, 0)};
      for (int i = 0; i < n; ++i) {
        int choice = int((c >> (n - 1 - i)) & 1);
        int outcome = int((s >> (n - 1 - i)) & 1);
        Ket2 k = bs.measurement_ket(std::size_t(i), choice, outcome);
        std::vector<Complex> next(v.size() * 2);
        for (std::size_t g = 0; g < v.size(); ++g) {
          next[2 * g] = v[g] * k[0];
          next[2 * g + 1] = v[g] * k[1];
        }
        v = std::move(next);
      }
      Complex amp(0, 0);
      for (std::size_t g = 0; g < dim; ++g)
        amp += std::conj(v[g]) * psi.amplitudes[g];
      row[s] = std::norm(amp);
    }
    e.rows.push_back(std::move(row));
  }
  return e;
}

namespace {

// Eigen-decomposition of a 2x2 Hermitian matrix; eigenvalues descending,
// eigenvectors as unitary columns.
void hermitian_eig2(const Mat2& h, std::array<double, 2>& eig, Mat2& vecs) {
  const double a = h[0][0].real();
  const double d = h[1][1].real();
  const Complex b = h[0][1];
  const double disc = std::sqrt(std::max(
      0.0, 0.25 * (a - d) * (a - d) + std::norm(b)));
  eig = {0.5 * (a + d) + disc, 0.5 * (a + d) - disc};

  if (std::abs(b) < 1e-14) {
    if (a >= d) {
      vecs = mat2_identity();
    } else {
      vecs = Mat2{{{Complex(0, 0), Complex(1, 0)}, {Complex(1, 0), Complex(0, 0)}}};
      eig = {d, a};
    }
    return;
  }
  // (a - lambda) x + b y = 0  =>  v = (b, lambda - a)
  Ket2 v0{b, Complex(eig[0] - a, 0)};
  double n0 = std::sqrt(std::norm(v0[0]) + std::norm(v0[1]));
  v0 = {v0[0] / n0, v0[1] / n0};
  Ket2 v1{-std::conj(v0[1]), std::conj(v0[0])};
  vecs = Mat2{{{v0[0], v1[0]}, {v0[1], v1[1]}}};
}

}  // namespace

SchmidtForm schmidt_decompose(const PureState& psi) {
  if (psi.n_qubits != 2)
    throw std::invalid_argument("schmidt_decompose: need a 2-qubit state");
  // Coefficient matrix m[i][j] = amplitude of |ij>.
  Mat2 m{{{psi.amplitudes[0], psi.amplitudes[1]},
          {psi.amplitudes[2], psi.amplitudes[3]}}};
  Mat2 mtm = mat2_mul(mat2_adjoint(m), m);

  std::array<double, 2> eig;
  Mat2 v;
  hermitian_eig2(mtm, eig, v);
  const double s0 = std::sqrt(std::max(0.0, eig[0]));
  const double s1 = std::sqrt(std::max(0.0, eig[1]));

  // Left singular vectors u_k = M v_k / s_k.
  Ket2 v0{v[0][0], v[1][0]};
  Ket2 v1{v[0][1], v[1][1]};
  Ket2 u0 = mat2_apply(m, v0);
  u0 = {u0[0] / s0, u0[1] / s0};
  Ket2 u1;
  if (s1 > 1e-12) {
    u1 = mat2_apply(m, v1);
    u1 = {u1[0] / s1, u1[1] / s1};
  } else {
    u1 = {-std::conj(u0[1]), std::conj(u0[0])};
  }

  SchmidtForm sf;
  sf.theta = 2.0 * std::atan2(s1, s0);
  sf.u_a = Mat2{{{u0[0], u1[0]}, {u0[1], u1[1]}}};
  // psi_ij = sum_k s_k U_ik conj(V_jk), so Bob's unitary is conj(V).
  sf.u_b = Mat2{{{std::conj(v[0][0]), std::conj(v[0][1])},
                 {std::conj(v[1][0]), std::conj(v[1][1])}}};
  return sf;
}

DensityMatrix2 reduced_density(const PureState& psi) {
  if (psi.n_qubits != 2)
    throw std::invalid_argument("reduced_density: need a 2-qubit state");
  DensityMatrix2 rho{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      Complex sum(0, 0);
      for (int j = 0; j < 2; ++j)
        sum += psi.amplitudes[2 * i + j] * std::conj(psi.amplitudes[2 * k + j]);
      rho.m[i][k] = sum;
    }
  return rho;
}

std::array<double, 2> DensityMatrix2::eigenvalues() const {
  const double a = m[0][0].real();
  const double d = m[1][1].real();
  const double disc = std::sqrt(std::max(
      0.0, 0.25 * (a - d) * (a - d) + std::norm(m[0][1])));
  return {0.5 * (a + d) + disc, 0.5 * (a + d) - disc};
}

namespace {
double entropy_term(double lambda) {
  if (lambda <= 0.0) return 0.0;
  return -lambda * std::log2(lambda);
}
}  // namespace

double entanglement_entropy(const PureState& psi) {
  auto eig = reduced_density(psi).eigenvalues();
  return entropy_term(eig[0]) + entropy_term(eig[1]);
}

double diag_entropy(double theta) {
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
  return entropy_term(c2) + entropy_term(1.0 - c2);
}

GlobalDistribution separable_witness(const std::vector<PureState>& factors,
                                     const BellScenario& bs) {
  const int n = int(bs.parties.size());
  if (int(factors.size()) != n)
    throw std::invalid_argument("separable_witness: factor count mismatch");
  for (const auto& f : factors)
    if (f.n_qubits != 1)
      throw std::invalid_argument("separable_witness: factors must be 1-qubit");

  GlobalDistribution d;
  d.scenario = bs.scenario();
  const std::size_t n_global = d.scenario.global_assignment_count();

  // pr[measurement][outcome] under Born's rule for that party's factor.
  std::vector<std::array<double, 2>> pr;
  for (int i = 0; i < n; ++i) {
    for (int choice = 0; choice < 2; ++choice) {
      std::array<double, 2> p{};
      for (int o = 0; o < 2; ++o) {
        Ket2 k = bs.measurement_ket(std::size_t(i), choice, o);
        Complex amp = std::conj(k[0]) * factors[i].amplitudes[0] +
                      std::conj(k[1]) * factors[i].amplitudes[1];
        p[o] = std::norm(amp);
      }
      pr.push_back(p);
    }
  }

  const int nx = int(d.scenario.measurements.size());
  d.weights.assign(n_global, 0.0);
  double mass = 0.0;
  for (std::size_t g = 0; g < n_global; ++g) {
    double w = 1.0;
    for (int p = 0; p < nx; ++p) {
      int digit = int((g >> (nx - 1 - p)) & 1);
      w *= pr[p][digit];
    }
    d.weights[g] = w;
    mass += w;
  }
  d.total_mass = mass;
  return d;
}

}  // namespace ctxf
