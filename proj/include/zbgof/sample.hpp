#pragma once

#include <cstddef>
#include <vector>

#include "zbgof/errors.hpp"

namespace zbgof {

/// Raw observations x_1..x_n. Rejects n < 2, non-finite values and zero
/// variance at construction so the O(n^2) statistics never see bad input.
class Sample {
 public:
  explicit Sample(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

/// Divisor of the variance estimate behind the scaled residuals. kN is the
/// definition the null theory uses (and the published null quantile tables
/// follow); the published power entries were produced with kNminusOne.
enum class VarianceDivisor { kN, kNminusOne };

/// Scaled residuals Y_j = (x_j - mean) / S. With the kN divisor they satisfy
/// sum Y_j = 0 and sum Y_j^2 = n up to rounding.
struct ScaledResiduals {
  std::vector<double> y;
  std::size_t n() const { return y.size(); }
};

/// Positive tuning parameter of the Gaussian weight exp(-a t^2).
class TuningParam {
 public:
  explicit TuningParam(double a) : a_(a) {
    if (!(a > 0.0)) throw InvalidTuning("tuning parameter a must be > 0");
  }
  double value() const { return a_; }

 private:
  double a_;
};

ScaledResiduals scale_residuals(const Sample& sample,
                                VarianceDivisor divisor = VarianceDivisor::kN);

}  // namespace zbgof
