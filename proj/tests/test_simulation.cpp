#include <doctest.h>

#include <cmath>

#include "zbgof/errors.hpp"
#include "zbgof/simulation.hpp"

using namespace zbgof;

TEST_CASE("null simulation is deterministic and order-independent") {
  CompetitorId stat{CompetitorId::Kind::Z, 1.0};
  auto a = simulate_null_statistics(stat, 20, 2000, SeedSpec{123, 0});
  auto b = simulate_null_statistics(stat, 20, 2000, SeedSpec{123, 0});
  CHECK(a == b);
  // a longer run extends, not reshuffles, the shorter one
  auto c = simulate_null_statistics(stat, 20, 500, SeedSpec{123, 0});
  for (std::size_t r = 0; r < c.size(); ++r) CHECK(a[r] == c[r]);
}

TEST_CASE("empirical quantiles are monotone in the level") {
  QuantileTable t = simulate_critical_values(20, TuningParam(1.0), {0.9, 0.95, 0.99}, 5000,
                                             SeedSpec{11, 0});
  CHECK(t.quantiles.at(0.9) < t.quantiles.at(0.95));
  CHECK(t.quantiles.at(0.95) < t.quantiles.at(0.99));
  CHECK_THROWS_AS(
      simulate_critical_values(20, TuningParam(1.0), {0.95}, 500, SeedSpec{11, 0}),
      InvalidParams);
}

TEST_CASE("power against H0 recovers the nominal level") {
  CompetitorId stat{CompetitorId::Kind::Z, 1.0};
  auto values = simulate_null_statistics(stat, 50, 20000, SeedSpec{77, 0},
                                         VarianceDivisor::kNminusOne);
  double critical = empirical_quantile(values, 0.95);
  PowerEntry entry = power_study(AlternativeSpec::normal(0.0, 1.0), 50, stat, 0.05, 10000,
                                 SeedSpec{77, 1}, critical);
  CHECK(std::abs(entry.rejection_rate - 0.05) < 3.0 * std::sqrt(0.05 * 0.95 / 10000.0) + 0.003);
  CHECK(entry.mc_std_error ==
        doctest::Approx(std::sqrt(entry.rejection_rate * (1.0 - entry.rejection_rate) / 10000.0)));
}

TEST_CASE("every statistic holds its size at the simulated critical value") {
  const char* names[] = {"z(1)", "hv(2.5)", "be(1)", "bhep", "ad", "sw", "jb", "bcmr"};
  for (const char* name : names) {
    CAPTURE(name);
    CompetitorId stat = CompetitorId::parse(name);
    auto values = simulate_null_statistics(stat, 50, 20000, SeedSpec{501, 0},
                                           VarianceDivisor::kNminusOne);
    double level = stat.rejects_small() ? 0.05 : 0.95;
    double critical = empirical_quantile(values, level);
    PowerEntry entry = power_study(AlternativeSpec::normal(0.0, 1.0), 50, stat, 0.05, 10000,
                                   SeedSpec{501, 1}, critical);
    CHECK(std::abs(entry.rejection_rate - 0.05) < 3.0 * std::sqrt(0.05 * 0.95 / 10000.0) + 0.003);
  }
}

TEST_CASE("power is monotone in n up to Monte Carlo noise") {
  CompetitorId stat{CompetitorId::Kind::Z, 1.0};
  auto alt = AlternativeSpec::chisq(5.0);
  double prev = -1.0;
  for (std::size_t n : {20, 50, 100}) {
    auto values = simulate_null_statistics(stat, n, 20000, SeedSpec{601, n},
                                           VarianceDivisor::kNminusOne);
    double critical = empirical_quantile(values, 0.95);
    PowerEntry entry =
        power_study(alt, n, stat, 0.05, 5000, SeedSpec{601, 1000 + n}, critical);
    CHECK(entry.rejection_rate >= prev - 0.02);
    prev = entry.rejection_rate;
  }
}

TEST_CASE("quantile tables converge between 20k and 100k replications") {
  TuningParam a(1.0);
  QuantileTable small = simulate_critical_values(20, a, {0.95}, 20000, SeedSpec{701, 0});
  QuantileTable large = simulate_critical_values(20, a, {0.95}, 100000, SeedSpec{701, 1});
  // bootstrap std error of the 20k-replication quantile
  auto values = simulate_null_statistics(CompetitorId{CompetitorId::Kind::Z, 1.0}, 20, 20000,
                                         SeedSpec{701, 0});
  auto eng = make_engine(SeedSpec{701, 2}, 0);
  double sum = 0.0, sumsq = 0.0;
  const int boots = 100;
  for (int b = 0; b < boots; ++b) {
    std::vector<double> resample(values.size());
    for (auto& v : resample)
      v = values[static_cast<std::size_t>(uniform01(eng) * values.size())];
    double q = empirical_quantile(resample, 0.95);
    sum += q;
    sumsq += q * q;
  }
  double se = std::sqrt(sumsq / boots - (sum / boots) * (sum / boots));
  CHECK(std::abs(small.quantiles.at(0.95) - large.quantiles.at(0.95)) < 3.0 * se);
}

TEST_CASE("critical value lookup respects rejection direction") {
  QuantileTable t;
  t.quantiles[0.05] = 0.9;
  t.quantiles[0.95] = 2.0;
  CHECK(critical_from_table(t, CompetitorId::parse("z(1)"), 0.05) == 2.0);
  CHECK(critical_from_table(t, CompetitorId::parse("sw"), 0.05) == 0.9);
  CHECK_THROWS_AS(critical_from_table(t, CompetitorId::parse("z(1)"), 0.01),
                  MissingCriticalValue);
}

TEST_CASE("pearson critical value matches the asymptotic quantile") {
  PearsonFit fit = pearson_fit(moment_summary(TuningParam(1.0)));
  CHECK(critical_from_pearson(fit, 0.05) == doctest::Approx(2.23934).epsilon(0.01));
}
