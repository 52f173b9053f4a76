#include <doctest.h>

#include <cmath>

#include "zbgof/alternatives.hpp"
#include "zbgof/errors.hpp"

using namespace zbgof;

namespace {

// sample mean/variance vs analytic values, within 4 standard errors
void check_sampling_moments(const AlternativeSpec& spec, std::size_t n = 1000000) {
  Sample s = sample_alternative(spec, n, SeedSpec{99, 7});
  double mean = 0.0;
  for (double v : s.values()) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0, m4 = 0.0;
  for (double v : s.values()) {
    double d = v - mean;
    var += d * d;
    m4 += d * d * d * d;
  }
  var /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  double se_mean = std::sqrt(var / static_cast<double>(n));
  double se_var = std::sqrt(std::max(m4 - var * var, 0.0) / static_cast<double>(n));
  CAPTURE(spec.name());
  CHECK(std::abs(mean - spec.mean()) < 4.0 * se_mean);
  CHECK(std::abs(var - spec.variance()) < 4.0 * se_var);
}

}  // namespace

TEST_CASE("sampling is deterministic in (spec, n, seed)") {
  auto spec = AlternativeSpec::nmix(0.5, 1.0, 4.0);
  Sample a = sample_alternative(spec, 100, SeedSpec{42, 3});
  Sample b = sample_alternative(spec, 100, SeedSpec{42, 3});
  Sample c = sample_alternative(spec, 100, SeedSpec{42, 4});
  CHECK(a.values() == b.values());
  CHECK(a.values() != c.values());
}

TEST_CASE("analytic mixture moments match large-sample estimates") {
  auto spec = AlternativeSpec::nmix(0.5, 1.0, 4.0);
  // 0.5 N(0,1) + 0.5 N(1, 16): var = 0.5 + 0.5 (16 + 1) - 0.25
  CHECK(spec.mean() == doctest::Approx(0.5));
  CHECK(spec.variance() == doctest::Approx(8.75));
  check_sampling_moments(spec);
}

TEST_CASE("sampling moments across families") {
  check_sampling_moments(AlternativeSpec::gamma(5.0, 1.0));
  check_sampling_moments(AlternativeSpec::chisq(5.0));
  check_sampling_moments(AlternativeSpec::student_t(5.0));
  check_sampling_moments(AlternativeSpec::uniform(-2.0, 3.0));
  check_sampling_moments(AlternativeSpec::beta(2.0, 5.0));
  check_sampling_moments(AlternativeSpec::weibull(1.0, 0.5), 4000000);
  check_sampling_moments(AlternativeSpec::gumbel(1.0, 2.0));
  check_sampling_moments(AlternativeSpec::lognormal(0.0, 1.0), 4000000);
  check_sampling_moments(AlternativeSpec::normal(2.0, 9.0));
}

TEST_CASE("gumbel uses the max convention") {
  // max-Gumbel is right-skewed
  Sample s = sample_alternative(AlternativeSpec::gumbel(1.0, 2.0), 200000, SeedSpec{5, 0});
  double mean = 0.0;
  for (double v : s.values()) mean += v;
  mean /= static_cast<double>(s.size());
  double m2 = 0.0, m3 = 0.0;
  for (double v : s.values()) {
    double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  CHECK(m3 / s.size() / std::pow(m2 / s.size(), 1.5) > 0.5);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(AlternativeSpec::student_t(-1.0).validate(), InvalidParams);
  CHECK_THROWS_AS(AlternativeSpec::uniform(2.0, 1.0).validate(), InvalidParams);
  CHECK_THROWS_AS(AlternativeSpec::nmix(1.5, 0.0, 1.0).validate(), InvalidParams);
  CHECK_THROWS_AS(AlternativeSpec::gamma(0.0, 1.0).validate(), InvalidParams);
  CHECK_THROWS_AS(sample_alternative(AlternativeSpec::weibull(-1.0, 1.0), 10, SeedSpec{}),
                  InvalidParams);
}

TEST_CASE("t moments guard their degrees of freedom") {
  CHECK(!AlternativeSpec::student_t(2.0).has_finite_second_moment());
  CHECK_THROWS_AS(AlternativeSpec::student_t(2.0).variance(), UnsupportedAlternative);
  CHECK(AlternativeSpec::student_t(3.0).variance() == doctest::Approx(3.0));
}

TEST_CASE("name parser round trips the CLI formats") {
  CHECK(parse_alternative("t3").family == AlternativeSpec::Family::StudentT);
  CHECK(parse_alternative("t(3)").p1 == 3.0);
  CHECK(parse_alternative("nmix(0.5,1,4)").p3 == 4.0);
  CHECK(parse_alternative("chisq5").p1 == 5.0);
  CHECK(parse_alternative("CHISQ(5)").p1 == 5.0);
  CHECK(parse_alternative("beta(2,5)").p2 == 5.0);
  CHECK(parse_alternative("gamma(1,5)").p2 == 5.0);
  CHECK(parse_alternative("weibull(1,0.5)").p2 == 0.5);
  CHECK(parse_alternative("gumbel(1,2)").family == AlternativeSpec::Family::Gumbel);
  CHECK(parse_alternative("lognormal(0,1)").family == AlternativeSpec::Family::LogNormal);
  CHECK(parse_alternative("ln(0,1)").p2 == 1.0);
  CHECK(parse_alternative("normal").p2 == 1.0);
  auto u = parse_alternative("uniform");
  CHECK(u.p2 == doctest::Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(parse_alternative("cauchy"), UnknownAlternativeName);
  CHECK_THROWS_AS(parse_alternative("t(-3)"), UnknownAlternativeName);
  CHECK_THROWS_AS(parse_alternative("nmix(0.5,1)"), UnknownAlternativeName);
  CHECK_THROWS_AS(parse_alternative(""), UnknownAlternativeName);
}

TEST_CASE("standardized cf satisfies g(0) = 1 and matches empirical cf") {
  for (auto spec : {AlternativeSpec::uniform(-2.0, 2.0), AlternativeSpec::nmix(0.5, 1.0, 4.0),
                    AlternativeSpec::gamma(5.0, 1.0), AlternativeSpec::chisq(5.0)}) {
    CAPTURE(spec.name());
    CHECK(spec.has_analytic_cf());
    CHECK(std::abs(spec.standardized_cf(0.0) - 1.0) < 1e-12);

    Sample s = sample_alternative(spec, 400000, SeedSpec{17, 1});
    double mu = spec.mean(), sd = std::sqrt(spec.variance());
    for (double t : {0.5, 1.0, 2.0}) {
      std::complex<double> emp(0.0, 0.0), demp(0.0, 0.0);
      for (double v : s.values()) {
        double x = (v - mu) / sd;
        emp += std::complex<double>(std::cos(t * x), std::sin(t * x));
        demp += std::complex<double>(-x * std::sin(t * x), x * std::cos(t * x));
      }
      emp /= static_cast<double>(s.size());
      demp /= static_cast<double>(s.size());
      CHECK(std::abs(emp - spec.standardized_cf(t)) < 0.01);
      CHECK(std::abs(demp - spec.standardized_cf_deriv(t)) < 0.01);
    }
  }
  CHECK(!AlternativeSpec::lognormal(0.0, 1.0).has_analytic_cf());
  CHECK_THROWS_AS(AlternativeSpec::lognormal(0.0, 1.0).standardized_cf(1.0),
                  UnsupportedAlternative);
}
