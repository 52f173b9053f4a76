#include "zbgof/sample.hpp"

#include <cmath>
#include <utility>

namespace zbgof {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw TooFewObservations();
  for (double v : values_) {
    if (!std::isfinite(v)) throw DegenerateSample("sample contains non-finite value");
  }
  bool all_equal = true;
  for (double v : values_) {
    if (v != values_.front()) {
      all_equal = false;
      break;
    }
  }
  if (all_equal) throw DegenerateSample();
}

ScaledResiduals scale_residuals(const Sample& sample, VarianceDivisor divisor) {
  const auto& x = sample.values();
  const double n = static_cast<double>(x.size());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  var /= divisor == VarianceDivisor::kN ? n : n - 1.0;
  if (!(var > 0.0)) throw DegenerateSample();
  const double s = std::sqrt(var);
  ScaledResiduals res;
  res.y.reserve(x.size());
  for (double v : x) res.y.push_back((v - mean) / s);
  return res;
}

}  // namespace zbgof
