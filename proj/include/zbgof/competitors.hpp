#pragma once

#include <string>

#include "zbgof/sample.hpp"

namespace zbgof {

/// Weighted L2 statistic of the moment-generating-function test; gamma > 2
/// keeps the positive exponent integrable.
double hv_statistic(const ScaledResiduals& res, double gamma);

/// L2 distance between the empirical zero-bias transform and the empirical
/// distribution function; pairwise sum over ordered residuals as displayed.
double be_statistic(const ScaledResiduals& res, double a);

/// Empirical-characteristic-function statistic, three-term closed form.
double bhep_statistic(const ScaledResiduals& res, double beta);

/// Quantile-correlation statistic based on the L2-Wasserstein distance.
/// Rejects for LARGE values as tabulated.
double bcmr_statistic(const Sample& sample);

/// Anderson-Darling A^2 with estimated parameters (n-1 variance divisor,
/// matching the reference implementation).
double ad_statistic(const Sample& sample);

/// Shapiro-Wilk W via the Royston coefficient approximation; 3 <= n <= 5000.
/// Rejects for SMALL values.
double sw_statistic(const Sample& sample);

/// Jarque-Bera n*(skew^2/6 + (kurt-3)^2/24), biased moment estimators.
double jb_statistic(const Sample& sample);

/// Uniform handle over every implemented statistic, including Z itself, so
/// the power study and CLI can treat them interchangeably.
struct CompetitorId {
  enum class Kind { Z, AD, SW, JB, HV, BE, BHEP, BCMR };

  Kind kind = Kind::Z;
  double param = 1.0;  // a for Z/BE, gamma for HV, beta for BHEP; unused otherwise

  /// "z(1)", "ad", "sw", "jb", "hv(2.5)", "be(1)", "bhep", "bhep(0.5)", "bcmr"
  static CompetitorId parse(const std::string& text);
  std::string name() const;
  bool rejects_small() const { return kind == Kind::SW; }
  double evaluate(const Sample& sample,
                  VarianceDivisor divisor = VarianceDivisor::kN) const;
};

}  // namespace zbgof
