#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zbgof/alternatives.hpp"
#include "zbgof/competitors.hpp"
#include "zbgof/pearson.hpp"
#include "zbgof/rng.hpp"
#include "zbgof/sample.hpp"

namespace zbgof {

/// Empirical quantiles of a statistic under H0.
struct QuantileTable {
  std::size_t n = 0;
  double a = 1.0;  // 0 when the statistic has no tuning parameter
  std::uint64_t replications = 0;
  std::map<double, double> quantiles;  // level -> value, strictly increasing
  SeedSpec seed;
};

struct PowerEntry {
  AlternativeSpec alternative;
  std::size_t n = 0;
  CompetitorId statistic;
  double alpha = 0.05;
  std::uint64_t replications = 0;
  double rejection_rate = 0.0;
  double mc_std_error = 0.0;
};

/// Worker count: min(ZBGOF_THREADS if set, hardware concurrency). Results
/// never depend on it; each replication owns a seed-derived engine.
unsigned worker_count();

/// One statistic value per replication, on N(0,1) samples of size n.
/// Deterministic and order-independent: replication r uses
/// make_engine(seed, r) regardless of thread assignment.
std::vector<double> simulate_null_statistics(const CompetitorId& stat, std::size_t n,
                                             std::uint64_t replications, const SeedSpec& seed,
                                             VarianceDivisor divisor = VarianceDivisor::kN);

/// Type-7 (linear interpolation) empirical quantile of unsorted values.
double empirical_quantile(std::vector<double> values, double level);

QuantileTable simulate_critical_values(std::size_t n, const TuningParam& a,
                                       const std::vector<double>& levels,
                                       std::uint64_t replications, const SeedSpec& seed);

/// Rejection rate of `stat` against `alt` at the given critical value;
/// rejection direction comes from stat.rejects_small(). Defaults to the
/// kNminusOne residual scaling the published power entries were produced
/// with; the critical value should come from a null run with the same
/// divisor.
PowerEntry power_study(const AlternativeSpec& alt, std::size_t n, const CompetitorId& stat,
                       double alpha, std::uint64_t replications, const SeedSpec& seed,
                       double critical_value,
                       VarianceDivisor divisor = VarianceDivisor::kNminusOne);

/// Critical value looked up in a simulated quantile table (level 1-alpha, or
/// alpha for statistics rejecting small). Throws MissingCriticalValue.
double critical_from_table(const QuantileTable& table, const CompetitorId& stat, double alpha);

/// Critical value from the asymptotic Pearson fit (Z only, rejects large).
double critical_from_pearson(const PearsonFit& fit, double alpha);

}  // namespace zbgof
