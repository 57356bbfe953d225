#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ctxf/contextual_fraction.hpp"
#include "ctxf/entanglement.hpp"
#include "test_util.hpp"

using namespace ctxf;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2Minus1 = std::sqrt(2.0) - 1.0;
}  // namespace

TEST_CASE("state_scenario leaves diagonal states unrotated") {
  auto sc = state_scenario(diag_state(kPi / 3, 0.0));
  REQUIRE(sc.parties.size() == 2);
  for (const auto& party : sc.parties) {
    CHECK(party.bases[0].phi == doctest::Approx(kPi / 8));
    CHECK(party.bases[1].phi == doctest::Approx(5 * kPi / 8));
    REQUIRE(party.rotation.has_value());
    CHECK(unitarity_defect(*party.rotation) < 1e-12);
    // For |diag; theta, 0> the Schmidt unitaries act trivially on probabilities.
  }
}

TEST_CASE("the model under S_psi equals the diagonal model under S(Bx,By)") {
  // Entrywise the S_psi model is that of |diag; theta, -pi/4>; the
  // |diag; theta, +pi/4> table is the same up to a y-outcome relabelling,
  // so the contextual fractions agree.
  auto xy = shared_bell_scenario(basis_x(), basis_y(), 2);
  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 12; ++rep) {
    auto psi = random_pure_state(2, rng);
    double theta = schmidt_decompose(psi).theta;
    auto e1 = born_model(psi, state_scenario(psi));
    auto e2 = born_model(diag_state(theta, -kPi / 4), xy);
    CHECK(testutil::max_row_deviation(e1, e2) < 1e-9);
    auto e3 = born_model(diag_state(theta, kPi / 4), xy);
    CHECK(std::abs(contextual_fraction(e1).cf - contextual_fraction(e3).cf) <
          1e-9);
  }
}

TEST_CASE("distinguished cf: GHZ, product, and threshold states") {
  auto ghz = distinguished_cf(ghz_state(2));
  CHECK(ghz.theta == doctest::Approx(kPi / 2).epsilon(1e-9));
  CHECK(ghz.entropy == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ghz.cf == doctest::Approx(kSqrt2Minus1).epsilon(1e-6));

  auto product = distinguished_cf(tensor(bloch_ket(0, 0), bloch_ket(0, 0)));
  CHECK(product.cf <= 1e-6);

  auto boundary = distinguished_cf(diag_state(kPi / 4, 0.0));
  CHECK(boundary.cf <= 1e-6);
}

TEST_CASE("distinguished cf is a local-unitary invariant") {
  std::mt19937_64 rng(73);
  for (int rep = 0; rep < 10; ++rep) {
    auto psi = random_pure_state(2, rng);
    auto rotated =
        apply_local_unitaries(psi, random_unitary2(rng), random_unitary2(rng));
    auto a = distinguished_cf(psi);
    auto b = distinguished_cf(rotated);
    CHECK(std::abs(a.theta - b.theta) < 1e-9);
    CHECK(std::abs(a.cf - b.cf) < 1e-9);
  }
}

TEST_CASE("threshold entropy matches its two defining routes") {
  CHECK(threshold_entropy() == doctest::Approx(0.6009).epsilon(1e-4));
  CHECK(std::abs(threshold_entropy() -
                 entanglement_entropy(diag_state(kPi / 4, 0.0))) < 1e-9);
  CHECK(std::abs(threshold_entropy() - diag_entropy(kPi / 4)) < 1e-9);
}

TEST_CASE("phase rotation equivalence") {
  CHECK(phase_rotation_equivalence(kPi / 2, kPi / 8) < 1e-9);
  CHECK(phase_rotation_equivalence(kPi / 2, 0.0) < 1e-12);
  CHECK(phase_rotation_equivalence(kPi / 3, 0.3) < 1e-9);
}

TEST_CASE("GHZ under the pi/8-rotated pair matches the pi/4 diagonal cf") {
  auto rotated = shared_bell_scenario(basis_pi8(), basis_5pi8(), 2);
  auto xy = shared_bell_scenario(basis_x(), basis_y(), 2);
  auto e1 = born_model(ghz_state(2), rotated);
  auto e2 = born_model(diag_state(kPi / 2, -kPi / 4), xy);
  CHECK(testutil::max_row_deviation(e1, e2) < 1e-9);
  CHECK(contextual_fraction(e1).cf == doctest::Approx(kSqrt2Minus1).epsilon(1e-6));
  // Same cf with the opposite phase branch.
  auto e3 = born_model(diag_state(kPi / 2, kPi / 4), xy);
  CHECK(contextual_fraction(e3).cf ==
        doctest::Approx(kSqrt2Minus1).epsilon(1e-6));
}

TEST_CASE("theta curve: endpoints, threshold, and monotone cf") {
  auto curve = theta_curve(41);
  REQUIRE(curve.size() == 41);
  CHECK(curve.front().theta == 0.0);
  CHECK(curve.front().entropy == doctest::Approx(0.0));
  CHECK(curve.front().cf <= 1e-9);
  CHECK(curve.back().theta == doctest::Approx(kPi / 2));
  CHECK(curve.back().entropy == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(curve.back().cf == doctest::Approx(kSqrt2Minus1).epsilon(1e-6));

  for (std::size_t k = 1; k < curve.size(); ++k) {
    CHECK(curve[k].entropy > curve[k - 1].entropy);
    CHECK(curve[k].cf >= curve[k - 1].cf - 1e-6);
  }
  for (const auto& p : curve) {
    if (p.theta <= kPi / 4 + 1e-12) CHECK(p.cf <= 1e-6);
    if (p.theta > kPi / 4 + 0.05) CHECK(p.cf > 1e-6);
  }
}

TEST_CASE("monotonicity check on random pairs") {
  auto rep = monotonicity_check(50, 7);
  CHECK(rep.violations == 0);
  CHECK(rep.samples == 50);
  CHECK_THROWS_AS(monotonicity_check(1, 7), std::invalid_argument);
}

TEST_CASE("equatorial sweep: symmetry, diagonal, and the known peak") {
  auto g = equatorial_sweep(ghz_state(2), 16);
  REQUIRE(g.cf.size() == 256);
  for (int i = 0; i < 16; ++i) {
    CHECK(g.cf_at(i, i) <= 1e-6);  // duplicated-basis models
    for (int j = 0; j < 16; ++j)
      CHECK(std::abs(g.cf_at(i, j) - g.cf_at(j, i)) < 1e-9);
  }
  // phi = 2 pi k / 16: (pi/8, 5 pi/8) is (k=1, k=5).
  CHECK(g.cf_at(1, 5) == doctest::Approx(kSqrt2Minus1).epsilon(1e-6));

  // phi+pi swaps the basis outcomes, so the landscape is pi-periodic and
  // each distinct maximum appears four times on the full torus.
  auto all = local_maxima_cells(g);
  auto distinct = distinct_equatorial_maxima(g);
  CHECK(all.size() == 4 * distinct.size());
  CHECK(distinct.size() == 4);
}

TEST_CASE("distinct_equatorial_maxima leaves asymmetric grids unfolded") {
  SweepGrid g;
  g.axis0 = {"phi1", 0.0, 1.0, 6};
  g.axis1 = {"phi2", 0.0, 1.0, 6};
  g.cf.assign(36, 0.0);
  g.cf[1 * 6 + 2] = 1.0;  // single peak, no half-period symmetry
  auto distinct = distinct_equatorial_maxima(g);
  REQUIRE(distinct.size() == 1);
  CHECK(distinct[0] == std::pair<int, int>{1, 2});
}

TEST_CASE("duplicated-basis models match the copy-outcome oracle") {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> uph(0.0, 2 * kPi);
  for (int rep = 0; rep < 10; ++rep) {
    BlochBasis b{kPi / 2, uph(rng)};
    auto sc = shared_bell_scenario(b, b, 2);
    auto psi = random_pure_state(2, rng);
    auto d = testutil::copy_outcome_distribution(psi, sc);
    auto e = born_model(psi, sc);
    for (std::size_t c = 0; c < e.rows.size(); ++c) {
      auto row = marginalize(d, c);
      for (std::size_t s = 0; s < row.size(); ++s)
        CHECK(std::abs(row[s] - e.rows[c][s]) < 1e-12);
    }
  }
}

TEST_CASE("diagonal sweep layers and the pi/2 row") {
  auto g = diagonal_sweep(9);
  REQUIRE(g.cf.size() == 81);
  REQUIRE(g.entropy.size() == 81);
  // theta = pi/2 is row 4; entropy 1 across the row.
  for (int j = 0; j < 9; ++j)
    CHECK(g.entropy[4 * 9 + j] == doctest::Approx(1.0).epsilon(1e-9));
  // (pi/2, pi/4) is (i=4, j=1) with phi step 2pi/9... not on grid; use grid 8.
  auto g8 = diagonal_sweep(8);
  // phi = 2 pi k / 8: pi/4 is k=1; theta = pi i / 7 has no exact pi/2.
  CHECK(*std::max_element(g8.cf.begin(), g8.cf.end()) <= 1.0 - 1e-3);
  (void)g8;
}

TEST_CASE("diagonal-state peak value at (pi/2, pi/4)") {
  auto xy = shared_bell_scenario(basis_x(), basis_y(), 2);
  auto peak = contextual_fraction(born_model(diag_state(kPi / 2, kPi / 4), xy));
  CHECK(peak.cf == doctest::Approx(kSqrt2Minus1).epsilon(1e-6));

  auto flat = contextual_fraction(born_model(diag_state(kPi / 2, 0.0), xy));
  CHECK(flat.cf <= 1e-6);  // frozen LP observation for the phi = 0 section

  auto zero = contextual_fraction(born_model(diag_state(0.0, 1.0), xy));
  CHECK(zero.cf <= 1e-6);
}

TEST_CASE("CSV writers emit the pinned headers") {
  std::ostringstream os;
  write_equatorial_csv(os, equatorial_sweep(ghz_state(2), 2));
  CHECK(os.str().rfind("phi1,phi2,cf\n", 0) == 0);

  os.str("");
  write_diagonal_csv(os, diagonal_sweep(2));
  CHECK(os.str().rfind("theta,phi,entropy,cf\n", 0) == 0);

  os.str("");
  write_theta_curve_csv(os, theta_curve(2));
  CHECK(os.str().rfind("theta,entropy,cf\n", 0) == 0);

  os.str("");
  write_monotonicity_csv(os, MonotonicityReport{42, 10, 0});
  CHECK(os.str() == "seed,samples,violations\n42,10,0\n");
}

TEST_CASE("local maxima counting on a synthetic periodic grid") {
  SweepGrid g;
  g.axis0 = {"phi1", 0.0, 1.0, 8};
  g.axis1 = {"phi2", 0.0, 1.0, 8};
  g.cf.assign(64, 0.0);
  g.cf[1 * 8 + 1] = 1.0;
  g.cf[5 * 8 + 6] = 0.7;
  // Plateau pair merged into a single maximum.
  g.cf[3 * 8 + 3] = 0.5;
  g.cf[3 * 8 + 4] = 0.5 + 1e-9;
  auto maxima = local_maxima_cells(g);
  CHECK(maxima.size() == 3);
}
