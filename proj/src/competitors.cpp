#include "zbgof/competitors.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "zbgof/errors.hpp"
#include "zbgof/z_statistic.hpp"

namespace zbgof {

namespace {

constexpr double kPi = 3.14159265358979323846;

double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }
double Phi(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }
double Phi_inv(double p) { return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p); }

// correction term of BCMR depends only on n; cached across replications
double bcmr_correction(std::size_t n) {
  static std::map<std::size_t, double> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // integral of t(1-t)/phi(Phi^-1(t))^2 dt on (1/(n+1), n/(n+1)),
  // substituted with u = Phi^-1(t): integral of Phi(u)(1-Phi(u))/phi(u) du
  double lo = Phi_inv(1.0 / (n + 1.0));
  double hi = Phi_inv(n / (n + 1.0));
  double val = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      [](double u) { return Phi(u) * (1.0 - Phi(u)) / phi(u); }, lo, hi, 12, 1e-12);
  std::lock_guard<std::mutex> lk(mu);
  cache[n] = val;
  return val;
}

}  // namespace

double hv_statistic(const ScaledResiduals& res, double gamma) {
  if (!(gamma > 2.0)) throw InvalidTuning("HV requires gamma > 2");
  const auto& y = res.y;
  const std::size_t n = y.size();
  const double c1 = 1.0 / (4.0 * gamma * gamma) - 1.0 / (2.0 * gamma);
  const double c2 = 1.0 / (2.0 * gamma);
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      double s = y[j] + y[k];
      sum += std::exp(s * s / (4.0 * gamma)) * (y[j] * y[k] + s * s * c1 + c2);
    }
  return std::sqrt(kPi / gamma) * sum / static_cast<double>(n);
}

double be_statistic(const ScaledResiduals& res, double a) {
  if (!(a > 0.0)) throw InvalidTuning("BE requires a > 0");
  std::vector<double> y = res.y;
  const std::size_t n = y.size();
  const double sqrt_a = std::sqrt(a);
  const double coef = a / std::sqrt(2.0 * kPi * a);

  std::vector<double> sorted = y;
  std::sort(sorted.begin(), sorted.end());
  double pair_sum = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    double yk = sorted[k];
    double tail = 1.0 - Phi(yk / sqrt_a);
    double dens = coef * std::exp(-yk * yk / (2.0 * a));
    for (std::size_t j = 0; j < k; ++j) {
      double yj = sorted[j];
      pair_sum += tail * ((yj * yj - 1.0) * (yk * yk - 1.0) + a * yj * yk) +
                  dens * (-yj * yj * yk + yk + yj);
    }
  }

  double single_sum = 0.0;
  for (double v : y) {
    double v2 = v * v;
    single_sum += (1.0 - Phi(v / sqrt_a)) * (v2 * v2 + (a - 2.0) * v2 + 1.0) +
                  coef * std::exp(-v2 / (2.0 * a)) * (2.0 * v - v2 * v);
  }
  return (2.0 * pair_sum + single_sum) / static_cast<double>(n);
}

double bhep_statistic(const ScaledResiduals& res, double beta) {
  if (!(beta > 0.0)) throw InvalidTuning("BHEP requires beta > 0");
  const auto& y = res.y;
  const std::size_t n = y.size();
  const double b2 = beta * beta;
  double pair_sum = 0.0, single_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      double d = y[j] - y[k];
      pair_sum += std::exp(-0.5 * b2 * d * d);
    }
    single_sum += std::exp(-0.5 * b2 / (1.0 + b2) * y[j] * y[j]);
  }
  double val = (static_cast<double>(n) + 2.0 * pair_sum) / static_cast<double>(n) -
               2.0 / std::sqrt(1.0 + b2) * single_sum +
               static_cast<double>(n) / std::sqrt(1.0 + 2.0 * b2);
  return val;
}

double bcmr_statistic(const Sample& sample) {
  const auto& x = sample.values();
  const std::size_t n = x.size();
  if (n < 3) throw TooFewObservations("BCMR requires n >= 3");
  std::vector<double> s = x;
  std::sort(s.begin(), s.end());
  double mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(n);
  double var = 0.0;
  for (double v : s) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);
  if (var <= 0.0) throw DegenerateSample();

  // integral of Phi^-1 over ((k-1)/n, k/n) is phi(Phi^-1((k-1)/n)) - phi(Phi^-1(k/n))
  std::vector<double> dens(n + 1);
  dens[0] = 0.0;
  dens[n] = 0.0;
  for (std::size_t k = 1; k < n; ++k)
    dens[k] = phi(Phi_inv(static_cast<double>(k) / static_cast<double>(n)));
  double inner = 0.0;
  for (std::size_t k = 0; k < n; ++k) inner += s[k] * (dens[k] - dens[k + 1]);

  return static_cast<double>(n) * (1.0 - inner * inner / var) - bcmr_correction(n);
}

double ad_statistic(const Sample& sample) {
  const auto& x = sample.values();
  const std::size_t n = x.size();
  if (n < 3) throw UnsupportedSampleSize("AD requires n >= 3");
  std::vector<double> s = x;
  std::sort(s.begin(), s.end());
  double mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(n);
  double var = 0.0;
  for (double v : s) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n - 1);
  if (var <= 0.0) throw DegenerateSample();
  double sd = std::sqrt(var);

  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double z_lo = (s[k] - mean) / sd;
    double z_hi = (s[n - 1 - k] - mean) / sd;
    // log Phi and log(1 - Phi) via erfc for tail accuracy
    double lp = std::log(0.5 * std::erfc(-z_lo / std::sqrt(2.0)));
    double lq = std::log(0.5 * std::erfc(z_hi / std::sqrt(2.0)));
    acc += (2.0 * static_cast<double>(k) + 1.0) * (lp + lq);
  }
  return -static_cast<double>(n) - acc / static_cast<double>(n);
}

double sw_statistic(const Sample& sample) {
  const auto& x = sample.values();
  const std::size_t n = x.size();
  if (n < 3 || n > 5000) throw UnsupportedSampleSize("SW requires 3 <= n <= 5000");
  std::vector<double> s = x;
  std::sort(s.begin(), s.end());

  // Royston (1992) coefficient approximation
  std::vector<double> m(n);
  double mm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = Phi_inv((static_cast<double>(i + 1) - 0.375) / (static_cast<double>(n) + 0.25));
    mm += m[i] * m[i];
  }
  std::vector<double> a(n);
  double rmm = std::sqrt(mm);
  if (n == 3) {
    a[0] = -std::sqrt(0.5);
    a[1] = 0.0;
    a[2] = std::sqrt(0.5);
  } else {
    double u = 1.0 / std::sqrt(static_cast<double>(n));
    double cn = m[n - 1] / rmm;
    double an = -2.706056 * std::pow(u, 5) + 4.434685 * std::pow(u, 4) -
                2.071190 * std::pow(u, 3) - 0.147981 * u * u + 0.221157 * u + cn;
    if (n <= 5) {
      double ph = (mm - 2.0 * m[n - 1] * m[n - 1]) / (1.0 - 2.0 * an * an);
      double rph = std::sqrt(ph);
      for (std::size_t i = 1; i + 1 < n; ++i) a[i] = m[i] / rph;
      a[n - 1] = an;
      a[0] = -an;
    } else {
      double cn1 = m[n - 2] / rmm;
      double an1 = -3.582633 * std::pow(u, 5) + 5.682633 * std::pow(u, 4) -
                   1.752461 * std::pow(u, 3) - 0.293762 * u * u + 0.042981 * u + cn1;
      double ph = (mm - 2.0 * m[n - 1] * m[n - 1] - 2.0 * m[n - 2] * m[n - 2]) /
                  (1.0 - 2.0 * an * an - 2.0 * an1 * an1);
      double rph = std::sqrt(ph);
      for (std::size_t i = 2; i + 2 < n; ++i) a[i] = m[i] / rph;
      a[n - 1] = an;
      a[n - 2] = an1;
      a[0] = -an;
      a[1] = -an1;
    }
  }

  double mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(n);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += a[i] * s[i];
    den += (s[i] - mean) * (s[i] - mean);
  }
  if (den <= 0.0) throw DegenerateSample();
  return num * num / den;
}

double jb_statistic(const Sample& sample) {
  const auto& x = sample.values();
  const std::size_t n = x.size();
  if (n < 3) throw UnsupportedSampleSize("JB requires n >= 3");
  double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : x) {
    double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  if (m2 <= 0.0) throw DegenerateSample();
  double skew = m3 / std::pow(m2, 1.5);
  double kurt = m4 / (m2 * m2);
  return static_cast<double>(n) * (skew * skew / 6.0 + (kurt - 3.0) * (kurt - 3.0) / 24.0);
}

CompetitorId CompetitorId::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
  std::string head = s;
  bool has_param = false;
  double param = 0.0;
  std::size_t paren = s.find('(');
  if (paren != std::string::npos && s.back() == ')') {
    head = s.substr(0, paren);
    try {
      std::size_t used = 0;
      std::string arg = s.substr(paren + 1, s.size() - paren - 2);
      param = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      has_param = true;
    } catch (const std::exception&) {
      throw InvalidParams("bad statistic parameter in '" + text + "'");
    }
  }
  CompetitorId id;
  if (head == "z") {
    id.kind = Kind::Z;
    id.param = has_param ? param : 1.0;
  } else if (head == "hv") {
    id.kind = Kind::HV;
    id.param = has_param ? param : 2.5;
  } else if (head == "be") {
    id.kind = Kind::BE;
    id.param = has_param ? param : 1.0;
  } else if (head == "bhep") {
    id.kind = Kind::BHEP;
    id.param = has_param ? param : 1.0;
  } else if (head == "ad" || head == "sw" || head == "jb" || head == "bcmr") {
    if (has_param) throw InvalidParams("'" + text + "' takes no parameter");
    id.kind = head == "ad"     ? Kind::AD
              : head == "sw"   ? Kind::SW
              : head == "jb"   ? Kind::JB
                               : Kind::BCMR;
  } else {
    throw InvalidParams("unknown statistic '" + text + "'");
  }
  return id;
}

std::string CompetitorId::name() const {
  auto with = [&](const char* base) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s(%g)", base, param);
    return std::string(buf);
  };
  switch (kind) {
    case Kind::Z: return with("z");
    case Kind::HV: return with("hv");
    case Kind::BE: return with("be");
    case Kind::BHEP: return with("bhep");
    case Kind::AD: return "ad";
    case Kind::SW: return "sw";
    case Kind::JB: return "jb";
    case Kind::BCMR: return "bcmr";
  }
  return "?";
}

double CompetitorId::evaluate(const Sample& sample, VarianceDivisor divisor) const {
  switch (kind) {
    case Kind::Z: return z_statistic(scale_residuals(sample, divisor), TuningParam(param));
    case Kind::HV: return hv_statistic(scale_residuals(sample, divisor), param);
    case Kind::BE: return be_statistic(scale_residuals(sample, divisor), param);
    case Kind::BHEP: return bhep_statistic(scale_residuals(sample, divisor), param);
    case Kind::AD: return ad_statistic(sample);
    case Kind::SW: return sw_statistic(sample);
    case Kind::JB: return jb_statistic(sample);
    case Kind::BCMR: return bcmr_statistic(sample);
  }
  throw InvalidParams("unreachable statistic kind");
}

}  // namespace zbgof
