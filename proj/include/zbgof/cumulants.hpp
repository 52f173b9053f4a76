#pragma once

#include "zbgof/quadrature.hpp"
#include "zbgof/sample.hpp"

namespace zbgof {

/// Covariance kernel of the limiting Gaussian process under H0:
///   K_Z(s,t) = (st+1) exp(-(s-t)^2/2) - (2st+1) exp(-(s^2+t^2)/2).
double kernel_kz(double s, double t);

enum class CumulantSource { ClosedForm, QuadratureOracle };

/// First four cumulants of the limit null law Z_{inf,a}.
struct CumulantSet {
  double a;
  double kappa[4];  // kappa_1 .. kappa_4
  CumulantSource source;
};

/// mean, variance, sqrt(beta1) and beta2 of Z_{inf,a}.
struct MomentSummary {
  double mean;
  double variance;
  double sqrt_beta1;
  double beta2;
};

/// Closed-form kappa_m(a), m in 1..4.
double cumulant_closed_form(const TuningParam& a, int m);

/// Independent route: discretize the integral operator with kernel K_Z and
/// weight exp(-a t^2) on Gauss-Hermite nodes and take weighted traces of
/// matrix powers. The node count doubles until two successive evaluations
/// agree to quad.rel_tol.
double cumulant_oracle(const TuningParam& a, int m, const QuadratureSpec& quad);

CumulantSet cumulant_set(const TuningParam& a,
                         CumulantSource source = CumulantSource::ClosedForm,
                         const QuadratureSpec& quad = {});

MomentSummary moment_summary(const TuningParam& a);
MomentSummary moment_summary(const CumulantSet& set);

}  // namespace zbgof
