#include "zbgof/z_statistic.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace zbgof {

namespace {

// exp(-x) - 1 + x - x^2/2, the cubic-and-beyond tail of the exponential.
double exp_taylor_tail(double x) {
  if (x < 0.5) {
    // sum_{k>=3} (-x)^k / k!
    double term = -x * x * x / 6.0;
    double acc = term;
    for (int k = 4; k < 40; ++k) {
      term *= -x / k;
      acc += term;
      if (std::abs(term) < 1e-20 * std::abs(acc)) break;
    }
    return acc;
  }
  return std::exp(-x) - 1.0 + x - x * x / 2.0;
}

// Double-sum value S(b) = sum_{j,k} c_jk exp(-b u_jk) with
// c = Yj Yk + 2b - 2b u - 4b^2 u and u = (Yj - Yk)^2.
double pair_sum(const std::vector<double>& y, double b) {
  const double n = static_cast<double>(y.size());
  double p1 = 0, p2 = 0, p3 = 0, p4 = 0, p5 = 0, p6 = 0;
  for (double v : y) {
    const double v2 = v * v, v3 = v2 * v;
    p1 += v;
    p2 += v2;
    p3 += v3;
    p4 += v2 * v2;
    p5 += v2 * v3;
    p6 += v3 * v3;
  }
  const double p0 = n;
  // Coefficients of the quadratic Taylor part of exp(-b u), expressed in
  // power sums; orders b^0 and b^1 are exactly zero when sum Y = 0 and
  // sum Y^2 = n, and the grouping below keeps them small without
  // cancellation when those identities only hold to rounding.
  const double c0 = p1 * p1;
  const double c1 = 2.0 * (p0 - p2) * (p0 - p2) + 2.0 * p1 * (2.0 * p1 - p3);
  const double c2 =
      (p2 - p0) * (12.0 * p2 - 4.0 * p4) + 3.0 * p3 * p3 + p1 * (12.0 * p1 - 16.0 * p3 + p5);
  const double c3 = 10.0 * p0 * p4 - 2.0 * p0 * p6 - 40.0 * p1 * p3 + 12.0 * p1 * p5 +
                    30.0 * p2 * p2 - 30.0 * p2 * p4 + 20.0 * p3 * p3;
  const double c4 = -4.0 * p0 * p6 + 24.0 * p1 * p5 - 60.0 * p2 * p4 + 40.0 * p3 * p3;
  const double poly = c0 + b * (c1 + b * (c2 + b * (c3 + b * c4)));

  // Remainder, pairwise symmetric in a fixed (j < k) order. Diagonal pairs
  // have u = 0 and contribute nothing here.
  double rem = 0.0;
  const std::size_t m = y.size();
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      const double d = y[j] - y[k];
      const double u = d * d;
      const double c = y[j] * y[k] + 2.0 * b - 2.0 * b * u - 4.0 * b * b * u;
      rem += 2.0 * c * exp_taylor_tail(b * u);
    }
  }
  return poly + rem;
}

}  // namespace

double z_statistic(const ScaledResiduals& res, const TuningParam& a) {
  const double av = a.value();
  const double b = 1.0 / (4.0 * av);
  const double n = static_cast<double>(res.n());
  return std::sqrt(M_PI / av) / n * pair_sum(res.y, b);
}

double z_statistic_integral(const ScaledResiduals& res, const TuningParam& a,
                            const QuadratureSpec& quad) {
  quad.validate();
  const double av = a.value();
  const double n = static_cast<double>(res.n());
  const auto w_sum = [&](double t) {
    double s = 0.0;
    for (double yj : res.y) {
      const double c = std::cos(t * yj), sn = std::sin(t * yj);
      s += (yj + t) * c + (t - yj) * sn;
    }
    return s;
  };

  if (quad.scheme == QuadratureSpec::Scheme::AdaptiveInterval) {
    const double r = quad.truncation_radius / std::sqrt(av);
    const auto f = [&](double t) {
      const double w = w_sum(t);
      return w * w * std::exp(-av * t * t);
    };
    double err = 0.0;
    const double val = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, -r, r, 15, quad.rel_tol, &err);
    if (err > quad.abs_tol + quad.rel_tol * std::abs(val))
      throw QuadratureFailure("adaptive quadrature did not reach requested accuracy");
    return val / n;
  }

  // Gauss-Hermite with the weight exp(-a t^2) absorbed; refine once to
  // confirm convergence.
  double prev = 0.0;
  for (int pass = 0; pass < 2; ++pass) {
    const int nodes = quad.node_count * (pass + 1);
    const auto rule = gauss_hermite(nodes);
    const double inv_sqrt_a = 1.0 / std::sqrt(av);
    double acc = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double t = rule.nodes[i] * inv_sqrt_a;
      const double w = w_sum(t);
      acc += rule.weights[i] * w * w;
    }
    acc *= inv_sqrt_a / n;
    if (pass == 1 && std::abs(acc - prev) > quad.abs_tol + quad.rel_tol * std::abs(acc))
      throw QuadratureFailure("Gauss-Hermite refinement did not converge");
    prev = acc;
  }
  return prev;
}

double skewness_limit_diagnostic(const ScaledResiduals& res, const TuningParam& a) {
  const double av = a.value();
  const double n = static_cast<double>(res.n());
  // the limit identity needs residuals with (1/n) sum Y^2 = 1 exactly
  double s2 = 0.0;
  for (double y : res.y) s2 += y * y;
  ScaledResiduals unit;
  unit.y.reserve(res.n());
  const double c = std::sqrt(n / s2);
  for (double y : res.y) unit.y.push_back(c * y);
  return 16.0 * std::pow(av, 2.5) / (3.0 * n * std::sqrt(M_PI)) * z_statistic(unit, a);
}

}  // namespace zbgof
