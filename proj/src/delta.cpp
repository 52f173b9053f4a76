#include "zbgof/delta.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "zbgof/errors.hpp"

namespace zbgof {

namespace {

// integral of f(t) * exp(-a t^2) dt over the real line, per the spec's scheme
double weighted_integral(const std::function<double(double)>& f, double a,
                         const QuadratureSpec& quad) {
  if (quad.scheme == QuadratureSpec::Scheme::AdaptiveInterval) {
    const double radius = quad.truncation_radius / std::sqrt(a);
    double err = 0.0;
    double val = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        [&](double t) { return f(t) * std::exp(-a * t * t); }, -radius, radius, 12, quad.rel_tol,
        &err);
    if (!(err <= quad.abs_tol + quad.rel_tol * std::abs(val)))
      throw QuadratureFailure("adaptive integration did not reach tolerance");
    return val;
  }
  const double inv_sqrt_a = 1.0 / std::sqrt(a);
  auto rule = gauss_hermite(quad.node_count);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(rule.nodes[i] * inv_sqrt_a);
  return sum * inv_sqrt_a;
}

DeltaResult delta_analytic(const AlternativeSpec& alt, const QuadratureSpec& quad, double a) {
  DeltaResult out;
  out.method = DeltaResult::Method::AnalyticCf;
  out.delta = weighted_integral(
      [&](double t) {
        std::complex<double> v =
            alt.standardized_cf_deriv(t) + t * alt.standardized_cf(t);
        return std::norm(v);
      },
      a, quad);
  if (out.delta < 0.0) out.delta = 0.0;
  return out;
}

DeltaResult delta_monte_carlo(const AlternativeSpec& alt, const QuadratureSpec& quad,
                              std::uint64_t mc_budget, const SeedSpec& seed, double a) {
  const int batches = 16;
  const std::size_t per_batch = static_cast<std::size_t>(mc_budget / batches);
  if (per_batch < 2) throw InvalidParams("mc_budget too small for batched estimation");

  const double mu = alt.mean();
  const double sd = std::sqrt(alt.variance());
  const double inv_sqrt_a = 1.0 / std::sqrt(a);
  auto rule = gauss_hermite(quad.node_count);
  const std::size_t m = rule.nodes.size();

  // per-batch means of psi(t) = E[(X+t)cos(tX) + (t-X)sin(tX)] on the grid
  std::vector<std::vector<double>> psi(batches, std::vector<double>(m, 0.0));
  for (int b = 0; b < batches; ++b) {
    auto eng = make_engine(seed, static_cast<std::uint64_t>(b));
    auto draws = draw_alternative(alt, per_batch, eng);
    for (double raw : draws) {
      double x = (raw - mu) / sd;
      for (std::size_t i = 0; i < m; ++i) {
        double t = rule.nodes[i] * inv_sqrt_a;
        psi[b][i] += (x + t) * std::cos(t * x) + (t - x) * std::sin(t * x);
      }
    }
    for (std::size_t i = 0; i < m; ++i) psi[b][i] /= static_cast<double>(per_batch);
  }

  // unbiased psi(t)^2 per node: U-statistic over batch pairs; jackknife SE
  std::vector<double> sum_b(m, 0.0), sum_sq(m, 0.0);
  for (int b = 0; b < batches; ++b)
    for (std::size_t i = 0; i < m; ++i) {
      sum_b[i] += psi[b][i];
      sum_sq[i] += psi[b][i] * psi[b][i];
    }
  auto integrate_nodewise = [&](const std::vector<double>& vals) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += rule.weights[i] * vals[i];
    return s * inv_sqrt_a;
  };

  const double B = batches;
  std::vector<double> full(m);
  for (std::size_t i = 0; i < m; ++i)
    full[i] = (sum_b[i] * sum_b[i] - sum_sq[i]) / (B * (B - 1.0));
  double delta_hat = integrate_nodewise(full);

  std::vector<double> loo(batches);
  std::vector<double> node(m);
  for (int b = 0; b < batches; ++b) {
    for (std::size_t i = 0; i < m; ++i) {
      double s = sum_b[i] - psi[b][i];
      double q = sum_sq[i] - psi[b][i] * psi[b][i];
      node[i] = (s * s - q) / ((B - 1.0) * (B - 2.0));
    }
    loo[b] = integrate_nodewise(node);
  }
  double mean_loo = 0.0;
  for (double v : loo) mean_loo += v;
  mean_loo /= B;
  double var_jack = 0.0;
  for (double v : loo) var_jack += (v - mean_loo) * (v - mean_loo);
  var_jack *= (B - 1.0) / B;

  DeltaResult out;
  out.method = DeltaResult::Method::MonteCarloCf;
  out.delta = delta_hat < 0.0 ? 0.0 : delta_hat;
  out.std_error = std::sqrt(var_jack);
  return out;
}

}  // namespace

DeltaResult delta_discrepancy(const AlternativeSpec& alt, const QuadratureSpec& quad,
                              std::uint64_t mc_budget, const SeedSpec& seed, TuningParam a) {
  alt.validate();
  quad.validate();
  if (!alt.has_finite_second_moment())
    throw UnsupportedAlternative("delta requires a finite second moment: " + alt.name());
  if (alt.has_analytic_cf()) return delta_analytic(alt, quad, a.value());
  return delta_monte_carlo(alt, quad, mc_budget, seed, a.value());
}

DeltaResult delta_discrepancy_monte_carlo(const AlternativeSpec& alt, const QuadratureSpec& quad,
                                          std::uint64_t mc_budget, const SeedSpec& seed,
                                          TuningParam a) {
  alt.validate();
  quad.validate();
  if (!alt.has_finite_second_moment())
    throw UnsupportedAlternative("delta requires a finite second moment: " + alt.name());
  return delta_monte_carlo(alt, quad, mc_budget, seed, a.value());
}

}  // namespace zbgof
