#include "zbgof/pearson.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>

#include "zbgof/errors.hpp"

namespace zbgof {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSymTol = 1e-9;

double iv_theta_integral(double m, double nu, double theta_hi) {
  // integral of cos(theta)^(2m-2) exp(-nu*theta) over (-pi/2, theta_hi)
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      [&](double th) {
        double c = std::cos(th);
        return std::pow(c, 2.0 * m - 2.0) * std::exp(-nu * th);
      },
      -0.5 * kPi, theta_hi, 12, 1e-12);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

double pearson_criterion(double sqrt_beta1, double beta2) {
  double b1 = sqrt_beta1 * sqrt_beta1;
  double den = 4.0 * (4.0 * beta2 - 3.0 * b1) * (2.0 * beta2 - 3.0 * b1 - 6.0);
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  return b1 * (beta2 + 3.0) * (beta2 + 3.0) / den;
}

PearsonFit pearson_fit(const MomentSummary& moments) {
  const double mu2 = moments.variance;
  if (!(mu2 > 0.0)) throw InfeasibleMoments("variance must be positive");
  double sb1 = moments.sqrt_beta1;
  const double b2 = moments.beta2;
  if (!(b2 - sb1 * sb1 - 1.0 > 0.0))
    throw InfeasibleMoments("need beta2 > beta1 + 1");

  PearsonFit fit;
  fit.moments = moments;
  fit.reflected = sb1 < 0.0;
  if (fit.reflected) sb1 = -sb1;
  const double b1 = sb1 * sb1;
  const bool symmetric = b1 < kSymTol;

  if (symmetric && std::abs(b2 - 3.0) < kSymTol) {
    fit.family = PearsonFit::Family::Normal;
    fit.loc = moments.mean;
    fit.scale = std::sqrt(mu2);
    return fit;
  }

  const double D = 10.0 * b2 - 12.0 * b1 - 18.0;
  const double c0 = mu2 * (4.0 * b2 - 3.0 * b1) / D;
  const double c1 = sb1 * std::sqrt(mu2) * (b2 + 3.0) / D;
  const double c2 = (2.0 * b2 - 3.0 * b1 - 6.0) / D;

  if (std::abs(c2) < 1e-12) {
    // beta2 on the gamma line 3 + 1.5*beta1
    fit.family = PearsonFit::Family::III;
    fit.shape1 = c0 / (c1 * c1);
    fit.scale = c1;
    fit.loc = moments.mean - c0 / c1;
    return fit;
  }

  const double disc = c1 * c1 - 4.0 * c0 * c2;
  if (disc < -1e-14 * (c1 * c1 + std::abs(4.0 * c0 * c2))) {
    fit.family = symmetric ? PearsonFit::Family::VII : PearsonFit::Family::IV;
    fit.iv_m = 0.5 / c2;
    fit.iv_s = std::sqrt(-disc) / (2.0 * std::abs(c2));
    fit.iv_nu = c1 * (2.0 * c2 - 1.0) / (2.0 * c2 * c2 * fit.iv_s);
    fit.loc = moments.mean - c1 / (2.0 * c2);
    if (!(fit.iv_m > 0.5)) throw InfeasibleMoments("type IV exponent not integrable");
    fit.iv_norm = fit.iv_s * iv_theta_integral(fit.iv_m, fit.iv_nu, 0.5 * kPi);
    return fit;
  }
  if (disc <= 0.0) {
    // double root: inverse gamma
    const double r = -c1 / (2.0 * c2);
    fit.family = PearsonFit::Family::V;
    fit.shape1 = 1.0 / c2 - 1.0;
    fit.shape2 = -(r + c1) / c2;  // rate
    fit.loc = moments.mean + r;
    if (!(fit.shape1 > 0.0 && fit.shape2 > 0.0))
      throw InfeasibleMoments("type V parameters out of range");
    return fit;
  }

  double r1 = (-c1 - std::sqrt(disc)) / (2.0 * c2);
  double r2 = (-c1 + std::sqrt(disc)) / (2.0 * c2);
  if (r1 > r2) std::swap(r1, r2);
  const double A = -(c1 + r1) / (c2 * (r1 - r2));
  const double B = -(c1 + r2) / (c2 * (r2 - r1));

  if (r1 * r2 < 0.0) {
    fit.family = symmetric ? PearsonFit::Family::II : PearsonFit::Family::I;
    fit.shape1 = A + 1.0;
    fit.shape2 = B + 1.0;
    fit.loc = moments.mean + r1;
    fit.scale = r2 - r1;
    if (!(fit.shape1 > 0.0 && fit.shape2 > 0.0))
      throw InfeasibleMoments("beta shape parameters out of range");
    return fit;
  }

  if (!(r2 < 0.0))
    throw InfeasibleMoments("pearson type VI with positive roots not supported");
  fit.family = PearsonFit::Family::VI;
  fit.shape1 = B + 1.0;             // beta-prime alpha
  fit.shape2 = -(A + B) - 1.0;      // beta-prime beta
  fit.loc = moments.mean + r2;
  fit.scale = r2 - r1;
  if (!(fit.shape1 > 0.0 && fit.shape2 > 0.0))
    throw InfeasibleMoments("beta-prime shape parameters out of range");
  return fit;
}

double PearsonFit::cdf(double x) const {
  if (reflected) {
    PearsonFit base = *this;
    base.reflected = false;
    return 1.0 - base.cdf(2.0 * moments.mean - x);
  }
  switch (family) {
    case Family::Normal:
      return normal_cdf((x - loc) / scale);
    case Family::I:
    case Family::II: {
      double u = (x - loc) / scale;
      if (u <= 0.0) return 0.0;
      if (u >= 1.0) return 1.0;
      return boost::math::ibeta(shape1, shape2, u);
    }
    case Family::III: {
      double u = (x - loc) / scale;
      if (u <= 0.0) return 0.0;
      return boost::math::gamma_p(shape1, u);
    }
    case Family::IV:
    case Family::VII: {
      double th = std::atan((x - loc) / iv_s);
      return iv_s * iv_theta_integral(iv_m, iv_nu, th) / iv_norm;
    }
    case Family::V: {
      double u = x - loc;
      if (u <= 0.0) return 0.0;
      return boost::math::gamma_q(shape1, shape2 / u);
    }
    case Family::VI: {
      double t = (x - loc) / scale;
      if (t <= 0.0) return 0.0;
      return boost::math::ibeta(shape1, shape2, t / (1.0 + t));
    }
  }
  throw InfeasibleMoments("unreachable family");
}

double PearsonFit::pdf(double x) const {
  if (reflected) {
    PearsonFit base = *this;
    base.reflected = false;
    return base.pdf(2.0 * moments.mean - x);
  }
  switch (family) {
    case Family::Normal: {
      double z = (x - loc) / scale;
      return std::exp(-0.5 * z * z) / (scale * std::sqrt(2.0 * kPi));
    }
    case Family::I:
    case Family::II: {
      double u = (x - loc) / scale;
      if (u <= 0.0 || u >= 1.0) return 0.0;
      return std::pow(u, shape1 - 1.0) * std::pow(1.0 - u, shape2 - 1.0) /
             (boost::math::beta(shape1, shape2) * scale);
    }
    case Family::III: {
      double u = (x - loc) / scale;
      if (u <= 0.0) return 0.0;
      return std::pow(u, shape1 - 1.0) * std::exp(-u) /
             (std::tgamma(shape1) * scale);
    }
    case Family::IV:
    case Family::VII: {
      double y = (x - loc) / iv_s;
      return std::pow(1.0 + y * y, -iv_m) * std::exp(-iv_nu * std::atan(y)) / iv_norm;
    }
    case Family::V: {
      double u = x - loc;
      if (u <= 0.0) return 0.0;
      return std::exp(shape1 * std::log(shape2) - (shape1 + 1.0) * std::log(u) -
                      shape2 / u - std::lgamma(shape1));
    }
    case Family::VI: {
      double t = (x - loc) / scale;
      if (t <= 0.0) return 0.0;
      return std::pow(t, shape1 - 1.0) * std::pow(1.0 + t, -shape1 - shape2) /
             (boost::math::beta(shape1, shape2) * scale);
    }
  }
  throw InfeasibleMoments("unreachable family");
}

double pearson_quantile(const PearsonFit& fit, double q) {
  if (!(q > 0.0 && q < 1.0)) throw InvalidParams("quantile level must lie in (0,1)");
  if (fit.reflected) {
    PearsonFit base = fit;
    base.reflected = false;
    return 2.0 * fit.moments.mean - pearson_quantile(base, 1.0 - q);
  }
  switch (fit.family) {
    case PearsonFit::Family::Normal:
      return fit.loc + fit.scale * std::sqrt(2.0) * boost::math::erf_inv(2.0 * q - 1.0);
    case PearsonFit::Family::I:
    case PearsonFit::Family::II:
      return fit.loc + fit.scale * boost::math::ibeta_inv(fit.shape1, fit.shape2, q);
    case PearsonFit::Family::III:
      return fit.loc + fit.scale * boost::math::gamma_p_inv(fit.shape1, q);
    case PearsonFit::Family::V:
      return fit.loc + fit.shape2 / boost::math::gamma_q_inv(fit.shape1, q);
    case PearsonFit::Family::VI: {
      double u = boost::math::ibeta_inv(fit.shape1, fit.shape2, q);
      return fit.loc + fit.scale * u / (1.0 - u);
    }
    case PearsonFit::Family::IV:
    case PearsonFit::Family::VII: {
      double lo = fit.loc - fit.iv_s, hi = fit.loc + fit.iv_s;
      while (fit.cdf(lo) > q) lo -= 2.0 * (fit.loc - lo);
      while (fit.cdf(hi) < q) hi += 2.0 * (hi - fit.loc);
      auto tol = boost::math::tools::eps_tolerance<double>(48);
      std::uintmax_t iters = 200;
      auto r = boost::math::tools::toms748_solve(
          [&](double x) { return fit.cdf(x) - q; }, lo, hi, tol, iters);
      return 0.5 * (r.first + r.second);
    }
  }
  throw InfeasibleMoments("unreachable family");
}

double pearson_pvalue(const PearsonFit& fit, double statistic) {
  double p = 1.0 - fit.cdf(statistic);
  if (p < 0.0) return 0.0;
  if (p > 1.0) return 1.0;
  return p;
}

}  // namespace zbgof
