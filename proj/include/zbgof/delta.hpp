#pragma once

#include <cstdint>

#include "zbgof/alternatives.hpp"
#include "zbgof/quadrature.hpp"
#include "zbgof/rng.hpp"
#include "zbgof/sample.hpp"

namespace zbgof {

/// The population discrepancy Delta = integral of |g'(t) + t g(t)|^2 e^{-at^2} dt
/// for the standardized characteristic function g of the alternative.
/// Delta = 0 exactly when the alternative is normal, and n^{-1} Z_{n,a} -> Delta.
struct DeltaResult {
  enum class Method { AnalyticCf, MonteCarloCf };
  double delta = 0.0;
  double std_error = 0.0;  // 0 for analytic evaluation
  Method method = Method::AnalyticCf;
};

/// Alternatives with a closed-form standardized cf are integrated directly
/// (std_error = 0). Otherwise psi(t) = E[(X+t)cos(tX) + (t-X)sin(tX)] is
/// estimated on the quadrature grid from mc_budget standardized draws split
/// into batches; the squared estimate is debiased across batches and the
/// standard error comes from a leave-one-batch-out jackknife.
/// Standardization uses the family's analytic mean and variance.
DeltaResult delta_discrepancy(const AlternativeSpec& alt, const QuadratureSpec& quad,
                              std::uint64_t mc_budget, const SeedSpec& seed,
                              TuningParam a = TuningParam{1.0});

/// Forces the Monte Carlo path even when an analytic cf exists, so the two
/// routes can be compared against each other.
DeltaResult delta_discrepancy_monte_carlo(const AlternativeSpec& alt, const QuadratureSpec& quad,
                                          std::uint64_t mc_budget, const SeedSpec& seed,
                                          TuningParam a = TuningParam{1.0});

}  // namespace zbgof
