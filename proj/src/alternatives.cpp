#include "zbgof/alternatives.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cctype>
#include <cmath>
#include <sstream>

#include "zbgof/errors.hpp"

namespace zbgof {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kSqrt3 = 1.7320508075688772935274463415058724;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParams(what);
}

}  // namespace

AlternativeSpec AlternativeSpec::normal(double mu, double sigma2) {
  return {Family::Normal, mu, sigma2, 0.0};
}
AlternativeSpec AlternativeSpec::nmix(double p, double mu, double sigma) {
  return {Family::NMix, p, mu, sigma};
}
AlternativeSpec AlternativeSpec::student_t(double nu) { return {Family::StudentT, nu, 0.0, 0.0}; }
AlternativeSpec AlternativeSpec::uniform(double lo, double hi) {
  return {Family::Uniform, lo, hi, 0.0};
}
AlternativeSpec AlternativeSpec::chisq(double nu) { return {Family::ChiSq, nu, 0.0, 0.0}; }
AlternativeSpec AlternativeSpec::beta(double alpha, double beta) {
  return {Family::Beta, alpha, beta, 0.0};
}
AlternativeSpec AlternativeSpec::gamma(double shape, double rate) {
  return {Family::Gamma, shape, rate, 0.0};
}
AlternativeSpec AlternativeSpec::weibull(double scale, double shape) {
  return {Family::Weibull, scale, shape, 0.0};
}
AlternativeSpec AlternativeSpec::gumbel(double loc, double scale) {
  return {Family::Gumbel, loc, scale, 0.0};
}
AlternativeSpec AlternativeSpec::lognormal(double mu, double sigma) {
  return {Family::LogNormal, mu, sigma, 0.0};
}

void AlternativeSpec::validate() const {
  switch (family) {
    case Family::Normal:
      require(std::isfinite(p1) && p2 > 0.0, "normal: need finite mu, sigma^2 > 0");
      break;
    case Family::NMix:
      require(p1 >= 0.0 && p1 <= 1.0, "nmix: need p in [0,1]");
      require(std::isfinite(p2) && p3 > 0.0, "nmix: need finite mu, sigma > 0");
      break;
    case Family::StudentT:
      require(p1 > 0.0, "t: need nu > 0");
      break;
    case Family::Uniform:
      require(p1 < p2, "uniform: need lo < hi");
      break;
    case Family::ChiSq:
      require(p1 > 0.0, "chisq: need nu > 0");
      break;
    case Family::Beta:
      require(p1 > 0.0 && p2 > 0.0, "beta: need alpha, beta > 0");
      break;
    case Family::Gamma:
      require(p1 > 0.0 && p2 > 0.0, "gamma: need shape, rate > 0");
      break;
    case Family::Weibull:
      require(p1 > 0.0 && p2 > 0.0, "weibull: need scale, shape > 0");
      break;
    case Family::Gumbel:
      require(std::isfinite(p1) && p2 > 0.0, "gumbel: need finite loc, scale > 0");
      break;
    case Family::LogNormal:
      require(std::isfinite(p1) && p2 > 0.0, "lognormal: need finite mu, sigma > 0");
      break;
  }
}

std::string AlternativeSpec::name() const {
  std::ostringstream os;
  switch (family) {
    case Family::Normal: os << "normal(" << p1 << "," << p2 << ")"; break;
    case Family::NMix: os << "nmix(" << p1 << "," << p2 << "," << p3 << ")"; break;
    case Family::StudentT: os << "t" << p1; break;
    case Family::Uniform: os << "uniform(" << p1 << "," << p2 << ")"; break;
    case Family::ChiSq: os << "chisq" << p1; break;
    case Family::Beta: os << "beta(" << p1 << "," << p2 << ")"; break;
    case Family::Gamma: os << "gamma(" << p1 << "," << p2 << ")"; break;
    case Family::Weibull: os << "weibull(" << p1 << "," << p2 << ")"; break;
    case Family::Gumbel: os << "gumbel(" << p1 << "," << p2 << ")"; break;
    case Family::LogNormal: os << "lognormal(" << p1 << "," << p2 << ")"; break;
  }
  return os.str();
}

bool AlternativeSpec::has_finite_second_moment() const {
  if (family == Family::StudentT) return p1 > 2.0;
  return true;
}

double AlternativeSpec::mean() const {
  switch (family) {
    case Family::Normal: return p1;
    case Family::NMix: return p1 * p2;
    case Family::StudentT:
      if (p1 <= 1.0) throw UnsupportedAlternative("t mean undefined for nu <= 1");
      return 0.0;
    case Family::Uniform: return 0.5 * (p1 + p2);
    case Family::ChiSq: return p1;
    case Family::Beta: return p1 / (p1 + p2);
    case Family::Gamma: return p1 / p2;
    case Family::Weibull: return p1 * std::tgamma(1.0 + 1.0 / p2);
    case Family::Gumbel: return p1 + p2 * kEulerGamma;
    case Family::LogNormal: return std::exp(p1 + 0.5 * p2 * p2);
  }
  throw InvalidParams("unreachable family");
}

double AlternativeSpec::variance() const {
  switch (family) {
    case Family::Normal: return p2;
    case Family::NMix: {
      double m = p1 * p2;
      return (1.0 - p1) + p1 * (p3 * p3 + p2 * p2) - m * m;
    }
    case Family::StudentT:
      if (p1 <= 2.0) throw UnsupportedAlternative("t variance infinite for nu <= 2");
      return p1 / (p1 - 2.0);
    case Family::Uniform: {
      double w = p2 - p1;
      return w * w / 12.0;
    }
    case Family::ChiSq: return 2.0 * p1;
    case Family::Beta: {
      double s = p1 + p2;
      return p1 * p2 / (s * s * (s + 1.0));
    }
    case Family::Gamma: return p1 / (p2 * p2);
    case Family::Weibull: {
      double g1 = std::tgamma(1.0 + 1.0 / p2);
      double g2 = std::tgamma(1.0 + 2.0 / p2);
      return p1 * p1 * (g2 - g1 * g1);
    }
    case Family::Gumbel: {
      constexpr double pi = 3.14159265358979323846;
      return pi * pi / 6.0 * p2 * p2;
    }
    case Family::LogNormal: {
      double s2 = p2 * p2;
      return (std::exp(s2) - 1.0) * std::exp(2.0 * p1 + s2);
    }
  }
  throw InvalidParams("unreachable family");
}

bool AlternativeSpec::has_analytic_cf() const {
  switch (family) {
    case Family::Normal:
    case Family::Uniform:
    case Family::NMix:
    case Family::Gamma:
    case Family::ChiSq:
      return true;
    default:
      return false;
  }
}

std::complex<double> AlternativeSpec::standardized_cf(double t) const {
  using cd = std::complex<double>;
  const cd i(0.0, 1.0);
  switch (family) {
    case Family::Normal:
      return cd(std::exp(-0.5 * t * t), 0.0);
    case Family::Uniform: {
      // standardized uniform is U(-sqrt3, sqrt3): g(t) = sin(sqrt3 t)/(sqrt3 t)
      double u = kSqrt3 * t;
      if (std::abs(u) < 1e-4) return cd(1.0 - u * u / 6.0 + u * u * u * u / 120.0, 0.0);
      return cd(std::sin(u) / u, 0.0);
    }
    case Family::NMix: {
      double s = std::sqrt(variance());
      double c = mean() / s, u = t / s;
      cd phi = (1.0 - p1) * std::exp(-0.5 * u * u) +
               p1 * std::exp(i * p2 * u - 0.5 * p3 * p3 * u * u);
      return std::exp(-i * c * t) * phi;
    }
    case Family::Gamma:
    case Family::ChiSq: {
      // depends on shape only: g(t) = exp(-i sqrt(k) t) (1 - i t / sqrt(k))^{-k}
      double k = family == Family::Gamma ? p1 : 0.5 * p1;
      double rk = std::sqrt(k);
      return std::exp(-i * rk * t) * std::pow(1.0 - i * t / rk, -k);
    }
    default:
      throw UnsupportedAlternative("no analytic cf for " + name());
  }
}

std::complex<double> AlternativeSpec::standardized_cf_deriv(double t) const {
  using cd = std::complex<double>;
  const cd i(0.0, 1.0);
  switch (family) {
    case Family::Normal:
      return cd(-t * std::exp(-0.5 * t * t), 0.0);
    case Family::Uniform: {
      // d/dt sin(u)/u with u = sqrt3 t: sqrt3 (cos u - sin(u)/u)/u
      double u = kSqrt3 * t;
      if (std::abs(u) < 1e-4)
        return cd(kSqrt3 * (-u / 3.0 + u * u * u / 30.0), 0.0);
      return cd(kSqrt3 * (std::cos(u) - std::sin(u) / u) / u, 0.0);
    }
    case Family::NMix: {
      double s = std::sqrt(variance());
      double c = mean() / s, inv_s = 1.0 / s, u = t * inv_s;
      cd phi = (1.0 - p1) * std::exp(-0.5 * u * u) +
               p1 * std::exp(i * p2 * u - 0.5 * p3 * p3 * u * u);
      cd dphi = (1.0 - p1) * (-u) * std::exp(-0.5 * u * u) +
                p1 * (i * p2 - p3 * p3 * u) * std::exp(i * p2 * u - 0.5 * p3 * p3 * u * u);
      return std::exp(-i * c * t) * (-i * c * phi + inv_s * dphi);
    }
    case Family::Gamma:
    case Family::ChiSq: {
      double k = family == Family::Gamma ? p1 : 0.5 * p1;
      double rk = std::sqrt(k);
      cd g = std::exp(-i * rk * t) * std::pow(1.0 - i * t / rk, -k);
      return i * rk * g * (1.0 / (1.0 - i * t / rk) - 1.0);
    }
    default:
      throw UnsupportedAlternative("no analytic cf for " + name());
  }
}

double draw_normal(std::mt19937_64& eng) {
  return boost::math::erf_inv(2.0 * uniform01(eng) - 1.0) * std::sqrt(2.0);
}

// Marsaglia-Tsang; shape < 1 boosted via the U^{1/shape} trick.
double draw_gamma(std::mt19937_64& eng, double shape) {
  if (shape < 1.0) {
    double u = uniform01(eng);
    return draw_gamma(eng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = draw_normal(eng);
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = uniform01(eng);
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
  }
}

std::vector<double> draw_alternative(const AlternativeSpec& spec, std::size_t n,
                                     std::mt19937_64& eng) {
  spec.validate();
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    double x = 0.0;
    switch (spec.family) {
      case AlternativeSpec::Family::Normal:
        x = spec.p1 + std::sqrt(spec.p2) * draw_normal(eng);
        break;
      case AlternativeSpec::Family::NMix: {
        double coin = uniform01(eng);
        double z = draw_normal(eng);
        x = coin < spec.p1 ? spec.p2 + spec.p3 * z : z;
        break;
      }
      case AlternativeSpec::Family::StudentT: {
        double z = draw_normal(eng);
        double w = 2.0 * draw_gamma(eng, 0.5 * spec.p1);  // chi^2_nu
        x = z / std::sqrt(w / spec.p1);
        break;
      }
      case AlternativeSpec::Family::Uniform:
        x = spec.p1 + (spec.p2 - spec.p1) * uniform01(eng);
        break;
      case AlternativeSpec::Family::ChiSq:
        x = 2.0 * draw_gamma(eng, 0.5 * spec.p1);
        break;
      case AlternativeSpec::Family::Beta: {
        double g1 = draw_gamma(eng, spec.p1);
        double g2 = draw_gamma(eng, spec.p2);
        x = g1 / (g1 + g2);
        break;
      }
      case AlternativeSpec::Family::Gamma:
        x = draw_gamma(eng, spec.p1) / spec.p2;
        break;
      case AlternativeSpec::Family::Weibull:
        x = spec.p1 * std::pow(-std::log1p(-uniform01(eng)), 1.0 / spec.p2);
        break;
      case AlternativeSpec::Family::Gumbel:
        x = spec.p1 - spec.p2 * std::log(-std::log(uniform01(eng)));
        break;
      case AlternativeSpec::Family::LogNormal:
        x = std::exp(spec.p1 + spec.p2 * draw_normal(eng));
        break;
    }
    out[j] = x;
  }
  return out;
}

Sample sample_alternative(const AlternativeSpec& spec, std::size_t n, const SeedSpec& seed,
                          std::uint64_t replication) {
  auto eng = make_engine(seed, replication);
  return Sample(draw_alternative(spec, n, eng));
}

namespace {

std::vector<double> parse_args(const std::string& s, const std::string& whole) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UnknownAlternativeName("bad parameter '" + tok + "' in '" + whole + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

AlternativeSpec parse_alternative(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
  if (s.empty()) throw UnknownAlternativeName("empty alternative name");

  std::string head = s;
  std::vector<double> args;
  std::size_t paren = s.find('(');
  if (paren != std::string::npos) {
    if (s.back() != ')') throw UnknownAlternativeName("unbalanced parens in '" + text + "'");
    head = s.substr(0, paren);
    args = parse_args(s.substr(paren + 1, s.size() - paren - 2), text);
  } else {
    // allow trailing numeric shorthand: t3, chisq5, ln01 is NOT supported
    std::size_t d = head.find_first_of("0123456789.");
    if (d != std::string::npos) {
      args = parse_args(head.substr(d), text);
      head = head.substr(0, d);
    }
  }

  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw UnknownAlternativeName("'" + text + "': expected " + std::to_string(k) +
                                   " parameter(s), got " + std::to_string(args.size()));
  };
  AlternativeSpec spec;
  if (head == "normal" || head == "n") {
    if (args.empty()) args = {0.0, 1.0};
    want(2);
    spec = AlternativeSpec::normal(args[0], args[1]);
  } else if (head == "nmix") {
    want(3);
    spec = AlternativeSpec::nmix(args[0], args[1], args[2]);
  } else if (head == "t") {
    want(1);
    spec = AlternativeSpec::student_t(args[0]);
  } else if (head == "uniform" || head == "u") {
    if (args.empty()) args = {-kSqrt3, kSqrt3};
    want(2);
    spec = AlternativeSpec::uniform(args[0], args[1]);
  } else if (head == "chisq" || head == "chi2") {
    want(1);
    spec = AlternativeSpec::chisq(args[0]);
  } else if (head == "beta" || head == "b") {
    want(2);
    spec = AlternativeSpec::beta(args[0], args[1]);
  } else if (head == "gamma" || head == "g") {
    want(2);
    spec = AlternativeSpec::gamma(args[0], args[1]);
  } else if (head == "weibull" || head == "w") {
    want(2);
    spec = AlternativeSpec::weibull(args[0], args[1]);
  } else if (head == "gumbel" || head == "gum") {
    want(2);
    spec = AlternativeSpec::gumbel(args[0], args[1]);
  } else if (head == "lognormal" || head == "ln") {
    want(2);
    spec = AlternativeSpec::lognormal(args[0], args[1]);
  } else {
    throw UnknownAlternativeName("unknown alternative '" + text + "'");
  }
  try {
    spec.validate();
  } catch (const InvalidParams& e) {
    throw UnknownAlternativeName(std::string(e.what()) + " in '" + text + "'");
  }
  return spec;
}

}  // namespace zbgof
