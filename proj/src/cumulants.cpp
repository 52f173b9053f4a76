#include "zbgof/cumulants.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

namespace zbgof {

double kernel_kz(double s, double t) {
  const double d = s - t;
  return (s * t + 1.0) * std::exp(-0.5 * d * d) -
         (2.0 * s * t + 1.0) * std::exp(-0.5 * (s * s + t * t));
}

namespace {
#include "cumulant_closed_forms.inc"

double kappa_closed(double a, int m) {
  const bool large = a > kappa_closed_form_switch();
  switch (m) {
    case 1: return large ? kappa1_large_a(a) : kappa1_exact(a);
    case 2: return large ? kappa2_large_a(a) : kappa2_exact(a);
    case 3: return large ? kappa3_large_a(a) : kappa3_exact(a);
    case 4: return large ? kappa4_large_a(a) : kappa4_exact(a);
    default: throw InvalidParams("cumulant order m must be in 1..4");
  }
}

// Trace of the m-th power of the symmetrized node-weighted kernel matrix.
double trace_power(const TuningParam& a, int m, int nodes) {
  const double av = a.value();
  const auto rule = gauss_hermite(nodes);
  const double inv_sqrt_a = 1.0 / std::sqrt(av);
  Eigen::MatrixXd B(nodes, nodes);
  std::vector<double> t(nodes), sw(nodes);
  for (int i = 0; i < nodes; ++i) {
    t[i] = rule.nodes[i] * inv_sqrt_a;
    sw[i] = std::sqrt(rule.weights[i] * inv_sqrt_a);
  }
  for (int i = 0; i < nodes; ++i)
    for (int j = i; j < nodes; ++j) B(i, j) = B(j, i) = sw[i] * sw[j] * kernel_kz(t[i], t[j]);
  Eigen::MatrixXd P = B;
  for (int k = 1; k < m; ++k) P = (P * B).eval();
  return P.trace();
}

}  // namespace

double cumulant_closed_form(const TuningParam& a, int m) {
  if (m < 1 || m > 4) throw InvalidParams("cumulant order m must be in 1..4");
  return kappa_closed(a.value(), m);
}

double cumulant_oracle(const TuningParam& a, int m, const QuadratureSpec& quad) {
  if (m < 1 || m > 4) throw InvalidParams("cumulant order m must be in 1..4");
  quad.validate();
  const double pref = std::pow(2.0, m - 1) * std::tgamma(static_cast<double>(m));
  double prev = pref * trace_power(a, m, quad.node_count);
  for (int nodes = 2 * quad.node_count; nodes <= 16 * quad.node_count; nodes *= 2) {
    const double cur = pref * trace_power(a, m, nodes);
    if (std::abs(cur - prev) <= quad.abs_tol + quad.rel_tol * std::abs(cur)) return cur;
    prev = cur;
  }
  throw QuadratureFailure("cumulant oracle: node refinement did not converge");
}

CumulantSet cumulant_set(const TuningParam& a, CumulantSource source,
                         const QuadratureSpec& quad) {
  CumulantSet set;
  set.a = a.value();
  set.source = source;
  for (int m = 1; m <= 4; ++m)
    set.kappa[m - 1] = source == CumulantSource::ClosedForm ? cumulant_closed_form(a, m)
                                                            : cumulant_oracle(a, m, quad);
  return set;
}

MomentSummary moment_summary(const CumulantSet& set) {
  MomentSummary ms;
  ms.mean = set.kappa[0];
  ms.variance = set.kappa[1];
  ms.sqrt_beta1 = set.kappa[2] / std::pow(set.kappa[1], 1.5);
  ms.beta2 = 3.0 + set.kappa[3] / (set.kappa[1] * set.kappa[1]);
  return ms;
}

MomentSummary moment_summary(const TuningParam& a) {
  return moment_summary(cumulant_set(a));
}

}  // namespace zbgof
