#include <doctest.h>

#include <cmath>
#include <random>

#include "zbgof/sample.hpp"
#include "zbgof/z_statistic.hpp"

using namespace zbgof;

namespace {

constexpr double kPi = 3.14159265358979323846;

ScaledResiduals residuals(std::initializer_list<double> xs) {
  return scale_residuals(Sample(std::vector<double>(xs)));
}

std::vector<double> random_sample(std::mt19937_64& eng, std::size_t n) {
  std::normal_distribution<double> normal;  // test-side draws, no contract on values
  std::vector<double> x(n);
  for (auto& v : x) v = normal(eng);
  return x;
}

}  // namespace

TEST_CASE("hand-evaluated 2x2 sum at a = 1") {
  // residuals (-1, 1): diagonal bracket 1/(2a) + 1 = 3/2 twice;
  // off-diagonal d^2 = 4 gives -7/2 * e^{-1} twice; Z = sqrt(pi)/2 * (3 - 7 e^{-1})
  double expect = 0.5 * std::sqrt(kPi) * (3.0 - 7.0 * std::exp(-1.0));
  CHECK(z_statistic(residuals({-1.0, 1.0}), TuningParam(1.0)) ==
        doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("closed form matches the integral oracle") {
  std::mt19937_64 eng(7);
  QuadratureSpec quad;
  quad.scheme = QuadratureSpec::Scheme::AdaptiveInterval;
  for (double a : {0.25, 1.0, 5.0}) {
    TuningParam ta(a);
    for (int rep = 0; rep < 10; ++rep) {
      auto res = scale_residuals(Sample(random_sample(eng, 5 + 3 * rep)));
      double closed = z_statistic(res, ta);
      double oracle = z_statistic_integral(res, ta, quad);
      CHECK(closed == doctest::Approx(oracle).epsilon(1e-8));
    }
  }
}

TEST_CASE("two quadrature schemes agree") {
  std::mt19937_64 eng(11);
  auto res = scale_residuals(Sample(random_sample(eng, 23)));
  QuadratureSpec gh;  // default Gauss-Hermite
  QuadratureSpec ad;
  ad.scheme = QuadratureSpec::Scheme::AdaptiveInterval;
  for (double a : {0.5, 1.0, 3.0})
    CHECK(z_statistic_integral(res, TuningParam(a), gh) ==
          doctest::Approx(z_statistic_integral(res, TuningParam(a), ad)).epsilon(1e-9));
}

TEST_CASE("affine and permutation invariance") {
  std::mt19937_64 eng(3);
  auto x = random_sample(eng, 17);
  TuningParam a(1.0);
  double base = z_statistic(scale_residuals(Sample(x)), a);

  auto shifted = x;
  for (auto& v : shifted) v = 3.5 * v - 2.25;
  CHECK(z_statistic(scale_residuals(Sample(shifted)), a) ==
        doctest::Approx(base).epsilon(1e-10));

  auto reflected = x;
  for (auto& v : reflected) v = -v;  // Z is symmetric in the residual signs
  CHECK(z_statistic(scale_residuals(Sample(reflected)), a) ==
        doctest::Approx(base).epsilon(1e-10));

  auto permuted = x;
  std::shuffle(permuted.begin(), permuted.end(), eng);
  CHECK(z_statistic(scale_residuals(Sample(permuted)), a) ==
        doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("statistic is nonnegative") {
  std::mt19937_64 eng(5);
  for (int rep = 0; rep < 20; ++rep) {
    auto res = scale_residuals(Sample(random_sample(eng, 4 + rep)));
    for (double a : {0.1, 1.0, 10.0, 1e4})
      CHECK(z_statistic(res, TuningParam(a)) >= -1e-12);
  }
}

TEST_CASE("a -> infinity limit recovers squared sample skewness") {
  std::mt19937_64 eng(19);
  TuningParam huge(1e6);
  for (int rep = 0; rep < 10; ++rep) {
    auto res = scale_residuals(Sample(random_sample(eng, 30)));
    double m2 = 0.0, m3 = 0.0;
    for (double y : res.y) {
      m2 += y * y;
      m3 += y * y * y;
    }
    m2 /= static_cast<double>(res.n());
    m3 /= static_cast<double>(res.n());
    double skew = m3 / std::pow(m2, 1.5);
    double target = skew * skew;
    if (target < 1e-4) continue;  // relative comparison needs a nonzero limit
    CHECK(skewness_limit_diagnostic(res, huge) == doctest::Approx(target).epsilon(1e-3));
  }
}
