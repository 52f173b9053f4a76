#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "zbgof/rng.hpp"
#include "zbgof/sample.hpp"

namespace zbgof {

/// Tagged description of a sampling distribution. Parameter slots p1..p3 are
/// family-specific; use the factory functions rather than filling them by
/// hand.
struct AlternativeSpec {
  enum class Family {
    Normal,     // p1 = mu, p2 = sigma^2
    NMix,       // p1 = p, p2 = mu, p3 = sigma; draws N(mu,sigma^2) w.p. p, else N(0,1)
    StudentT,   // p1 = nu
    Uniform,    // p1 = lo, p2 = hi
    ChiSq,      // p1 = nu
    Beta,       // p1 = alpha, p2 = beta
    Gamma,      // p1 = shape, p2 = rate
    Weibull,    // p1 = scale, p2 = shape
    Gumbel,     // p1 = loc, p2 = scale (max convention)
    LogNormal,  // p1 = mu, p2 = sigma
  };

  Family family = Family::Normal;
  double p1 = 0.0;
  double p2 = 1.0;
  double p3 = 0.0;

  static AlternativeSpec normal(double mu, double sigma2);
  static AlternativeSpec nmix(double p, double mu, double sigma);
  static AlternativeSpec student_t(double nu);
  static AlternativeSpec uniform(double lo, double hi);
  static AlternativeSpec chisq(double nu);
  static AlternativeSpec beta(double alpha, double beta);
  static AlternativeSpec gamma(double shape, double rate);
  static AlternativeSpec weibull(double scale, double shape);
  static AlternativeSpec gumbel(double loc, double scale);
  static AlternativeSpec lognormal(double mu, double sigma);

  void validate() const;  // throws InvalidParams
  std::string name() const;

  bool has_finite_second_moment() const;
  double mean() const;      // throws UnsupportedAlternative if undefined
  double variance() const;  // throws UnsupportedAlternative if infinite

  /// True when the standardized characteristic function g and g' below are
  /// available in closed form (Normal, Uniform, NMix, Gamma, ChiSq).
  bool has_analytic_cf() const;
  std::complex<double> standardized_cf(double t) const;
  std::complex<double> standardized_cf_deriv(double t) const;
};

/// Parses CLI-style names: "normal(0,1)", "nmix(0.5,1,4)", "t3", "uniform"
/// (defaults to U(-sqrt3, sqrt3)), "chisq5", "beta(2,5)", "gamma(5,1)",
/// "weibull(1,0.5)", "gumbel(1,2)", "lognormal(0,1)".
AlternativeSpec parse_alternative(const std::string& text);  // throws UnknownAlternativeName

/// n iid draws, fully determined by (seed, replication). All variate
/// transforms are local to this library so output is stable across platforms.
Sample sample_alternative(const AlternativeSpec& spec, std::size_t n, const SeedSpec& seed,
                          std::uint64_t replication = 0);

/// Standard-normal draw via inverse CDF (shared by the simulation module).
double draw_normal(std::mt19937_64& eng);
double draw_gamma(std::mt19937_64& eng, double shape);  // unit rate

std::vector<double> draw_alternative(const AlternativeSpec& spec, std::size_t n,
                                     std::mt19937_64& eng);

}  // namespace zbgof
