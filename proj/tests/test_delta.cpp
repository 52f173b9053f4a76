#include <doctest.h>

#include <cmath>

#include "zbgof/delta.hpp"
#include "zbgof/errors.hpp"

using namespace zbgof;

TEST_CASE("normal alternatives have zero discrepancy") {
  QuadratureSpec quad;
  for (auto spec : {AlternativeSpec::normal(0.0, 1.0), AlternativeSpec::normal(-3.0, 0.25)}) {
    DeltaResult r = delta_discrepancy(spec, quad, 0, SeedSpec{});
    CHECK(r.method == DeltaResult::Method::AnalyticCf);
    CHECK(r.std_error == 0.0);
    CHECK(std::abs(r.delta) <= 1e-12);
  }
}

TEST_CASE("uniform discrepancy: analytic vs Monte Carlo within 3 std errors") {
  QuadratureSpec quad;
  auto spec = AlternativeSpec::uniform(-std::sqrt(3.0), std::sqrt(3.0));
  DeltaResult analytic = delta_discrepancy(spec, quad, 0, SeedSpec{});
  CHECK(analytic.method == DeltaResult::Method::AnalyticCf);
  CHECK(analytic.delta > 0.0);

  DeltaResult mc = delta_discrepancy_monte_carlo(spec, quad, 160000, SeedSpec{202, 0});
  CHECK(mc.method == DeltaResult::Method::MonteCarloCf);
  CHECK(mc.std_error > 0.0);
  CHECK(std::abs(mc.delta - analytic.delta) < 3.0 * mc.std_error);
}

TEST_CASE("uniform discrepancy is scale-invariant") {
  QuadratureSpec quad;
  double a = delta_discrepancy(AlternativeSpec::uniform(0.0, 1.0), quad, 0, SeedSpec{}).delta;
  double b = delta_discrepancy(AlternativeSpec::uniform(-5.0, 9.0), quad, 0, SeedSpec{}).delta;
  CHECK(a == doctest::Approx(b).epsilon(1e-10));
}

TEST_CASE("Monte Carlo path handles cf-less families and is deterministic") {
  QuadratureSpec quad;
  auto spec = AlternativeSpec::lognormal(0.0, 1.0);
  DeltaResult r1 = delta_discrepancy(spec, quad, 64000, SeedSpec{7, 1});
  DeltaResult r2 = delta_discrepancy(spec, quad, 64000, SeedSpec{7, 1});
  CHECK(r1.method == DeltaResult::Method::MonteCarloCf);
  CHECK(r1.delta == r2.delta);
  CHECK(r1.std_error == r2.std_error);
  CHECK(r1.delta > 0.0);
}

TEST_CASE("infinite second moments are rejected") {
  QuadratureSpec quad;
  CHECK_THROWS_AS(delta_discrepancy(AlternativeSpec::student_t(2.0), quad, 1000, SeedSpec{}),
                  UnsupportedAlternative);
}

TEST_CASE("gamma analytic discrepancy agrees with its Monte Carlo estimate") {
  QuadratureSpec quad;
  auto spec = AlternativeSpec::chisq(5.0);
  DeltaResult analytic = delta_discrepancy(spec, quad, 0, SeedSpec{});
  DeltaResult mc = delta_discrepancy_monte_carlo(spec, quad, 160000, SeedSpec{44, 0});
  CHECK(std::abs(mc.delta - analytic.delta) < 3.0 * mc.std_error);
}
