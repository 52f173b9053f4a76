#include "zbgof/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace zbgof {

GaussHermiteRule gauss_hermite(int n) {
  // Jacobi matrix of the Hermite polynomials (weight exp(-x^2)):
  // off-diagonal beta_k = sqrt(k/2), zero diagonal.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = std::sqrt(0.5 * k);
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  const double mu0 = std::sqrt(M_PI);
  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace zbgof
