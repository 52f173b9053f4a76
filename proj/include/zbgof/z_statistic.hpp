#pragma once

#include "zbgof/quadrature.hpp"
#include "zbgof/sample.hpp"

namespace zbgof {

/// Test statistic Z_{n,a} in closed form,
///
///   (1/n) sqrt(pi/a) sum_{j,k} [ (2a - d^2)/(4a^2) - d^2/(2a) + Y_j Y_k ]
///                              exp(-d^2/(4a)),   d = Y_j - Y_k.
///
/// Evaluated as an exactly equivalent split: the quadratic Taylor part of
/// exp(-d^2/(4a)) is summed through power sums of the residuals (the b^0
/// and b^1 orders vanish identically, so nothing is lost to cancellation
/// when a is huge), and the Taylor remainder is accumulated pairwise in a
/// fixed symmetric order.
double z_statistic(const ScaledResiduals& res, const TuningParam& a);

/// Direct numerical evaluation of n * integral |phi_n'(t) + t phi_n(t)|^2
/// exp(-a t^2) dt; oracle for z_statistic.
double z_statistic_integral(const ScaledResiduals& res, const TuningParam& a,
                            const QuadratureSpec& quad);

/// 16 a^{5/2} / (3 n sqrt(pi)) * Z_{n,a} on residuals renormalized to
/// (1/n) sum Y^2 = 1; approaches the squared skewness coefficient
/// (m3 / m2^{3/2})^2 as a -> infinity. Intended for large a (>= 1e3 or so).
double skewness_limit_diagnostic(const ScaledResiduals& res, const TuningParam& a);

}  // namespace zbgof
