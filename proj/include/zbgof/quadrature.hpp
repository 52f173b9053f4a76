#pragma once

#include <vector>

#include "zbgof/errors.hpp"

namespace zbgof {

/// Numerical integration policy for the kernel/cumulant and statistic
/// integrals.
struct QuadratureSpec {
  enum class Scheme { GaussHermite, AdaptiveInterval };

  Scheme scheme = Scheme::GaussHermite;
  int node_count = 128;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  double truncation_radius = 40.0;  // adaptive scheme only

  void validate() const {
    if (node_count < 16) throw QuadratureFailure("node_count must be >= 16");
    if (!(abs_tol > 0) || !(rel_tol > 0)) throw QuadratureFailure("tolerances must be > 0");
  }
};

/// Nodes/weights for integral f(x) exp(-x^2) dx on the real line
/// (Golub-Welsch on the Hermite recurrence).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermiteRule gauss_hermite(int n);

}  // namespace zbgof
