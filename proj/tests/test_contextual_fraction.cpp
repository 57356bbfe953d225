#include <doctest.h>

#include <random>

#include "ctxf/contextual_fraction.hpp"
#include "test_util.hpp"

using namespace ctxf;

TEST_CASE("build_cf_lp dimensions") {
  auto p = build_cf_lp(fixture_model("table1a"));
  CHECK(p.objective.size() == 8);           // 2^3 global assignments
  CHECK(p.constraint_matrix.size() == 8);   // 2 contexts x 4 outcomes
  CHECK(p.bounds.size() == 8);

  // (2,2,2) Bell scenario: 2^4 assignments, 4 contexts x 4 outcomes.
  MeasurementScenario sc;
  sc.measurements = {"a1", "a2", "b1", "b2"};
  sc.contexts = {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}};
  sc.outcome_arity = 2;
  EmpiricalModel e{sc, std::vector<std::vector<double>>(
                           4, {0.25, 0.25, 0.25, 0.25})};
  p = build_cf_lp(e);
  CHECK(p.objective.size() == 16);
  CHECK(p.constraint_matrix.size() == 16);
}

TEST_CASE("every single-context model is noncontextual") {
  MeasurementScenario sc{{"m0", "m1"}, {{"m0", "m1"}}, 2};
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    auto e = testutil::random_model(sc, rng);
    CHECK(contextual_fraction(e).ncf == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("fixture model contextual fractions") {
  CHECK(contextual_fraction(fixture_model("table1a")).cf ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(contextual_fraction(fixture_model("table1b")).cf ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(contextual_fraction(fixture_model("table1c")).cf ==
        doctest::Approx(0.5).epsilon(1e-9));

  CHECK(is_noncontextual(fixture_model("table1a"), 1e-6));
  CHECK_FALSE(is_noncontextual(fixture_model("table1b"), 1e-6));
  CHECK_THROWS_AS(is_noncontextual(fixture_model("table1a"), -1.0),
                  std::invalid_argument);
}

TEST_CASE("witness is dominated by the model and certifies the split") {
  auto e = fixture_model("table1c");
  auto r = contextual_fraction(e);

  CHECK(r.cf + r.ncf == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.witness.total_mass == doctest::Approx(r.ncf).epsilon(1e-6));
  for (double w : r.witness.weights) CHECK(w >= -1e-9);

  REQUIRE(r.noncontextual_part.has_value());
  REQUIRE(r.residual_part.has_value());
  for (std::size_t c = 0; c < e.rows.size(); ++c) {
    auto wrow = marginalize(r.witness, c);
    for (std::size_t s = 0; s < wrow.size(); ++s) {
      CHECK(wrow[s] <= e.rows[c][s] + 1e-6);
      double recombined = r.ncf * r.noncontextual_part->rows[c][s] +
                          r.cf * r.residual_part->rows[c][s];
      CHECK(recombined == doctest::Approx(e.rows[c][s]).epsilon(1e-6));
    }
  }
}

TEST_CASE("degenerate splits omit the empty part") {
  auto a = contextual_fraction(fixture_model("table1a"));
  CHECK(a.noncontextual_part.has_value());
  CHECK_FALSE(a.residual_part.has_value());

  auto b = contextual_fraction(fixture_model("table1b"));
  CHECK_FALSE(b.noncontextual_part.has_value());
  CHECK(b.residual_part.has_value());
}

TEST_CASE("cf is convex-compatible under mixing") {
  std::mt19937_64 rng(17);
  auto sc = fixture_model("table1a").scenario;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int rep = 0; rep < 30; ++rep) {
    auto e1 = testutil::random_model(sc, rng);
    auto e2 = testutil::random_model(sc, rng);
    double lambda = uni(rng);
    double lhs = contextual_fraction(mix_models(e1, e2, lambda)).cf;
    double rhs = lambda * contextual_fraction(e1).cf +
                 (1 - lambda) * contextual_fraction(e2).cf;
    CHECK(lhs <= rhs + 1e-6);
  }
}

TEST_CASE("results are deterministic") {
  std::mt19937_64 rng(23);
  auto e = testutil::random_model(fixture_model("table1a").scenario, rng);
  auto r1 = contextual_fraction(e);
  auto r2 = contextual_fraction(e);
  CHECK(r1.cf == r2.cf);
  CHECK(r1.witness.weights == r2.witness.weights);
  CHECK(r1.witness.total_mass == r2.witness.total_mass);
}

TEST_CASE("models whose rows are marginals of an explicit d have cf ~ 0") {
  auto sc = fixture_model("table1a").scenario;
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    GlobalDistribution d{sc, std::vector<double>(8), 0.0};
    double sum = 0.0;
    for (double& w : d.weights) {
      w = uni(rng);
      sum += w;
    }
    for (double& w : d.weights) w /= sum;
    d.total_mass = 1.0;

    EmpiricalModel e{sc, {marginalize(d, 0), marginalize(d, 1)}};
    CHECK(contextual_fraction(e).cf <= 1e-6);
  }
}
