#pragma once

#include "zbgof/cumulants.hpp"

namespace zbgof {

/// A Pearson-system distribution fitted to four moments. Negative-skew
/// targets are fitted after reflection (X -> 2*mean - X) and unreflected in
/// cdf/quantile, so the stored parameters always describe a positive-skew
/// member.
struct PearsonFit {
  enum class Family { Normal, I, II, III, IV, V, VI, VII };

  Family family = Family::Normal;
  MomentSummary moments{};  // the fit target
  bool reflected = false;

  // Beta (I/II), Gamma (III), inverse Gamma (V), BetaPrime (VI):
  double shape1 = 0.0, shape2 = 0.0, loc = 0.0, scale = 1.0;
  // Type IV/VII: density ~ (1 + y^2)^{-m} exp(-nu*atan(y)), y = (x-loc)/s
  double iv_m = 0.0, iv_nu = 0.0, iv_s = 1.0, iv_norm = 0.0;

  double cdf(double x) const;
  double pdf(double x) const;
};

/// Pearson selection criterion kappa = b1 (b2+3)^2 / (4 (4 b2 - 3 b1)(2 b2 - 3 b1 - 6)).
double pearson_criterion(double sqrt_beta1, double beta2);

PearsonFit pearson_fit(const MomentSummary& moments);  // throws InfeasibleMoments
double pearson_quantile(const PearsonFit& fit, double q);
double pearson_pvalue(const PearsonFit& fit, double statistic);

}  // namespace zbgof
